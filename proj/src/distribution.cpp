#include "qpe/distribution.hpp"

#include <cmath>

namespace qpe {

OutcomeDistribution::OutcomeDistribution(std::vector<std::string> labels,
                                         std::vector<double> probs)
    : labels_(std::move(labels)), probs_(std::move(probs)) {
    if (labels_.size() != probs_.size())
        fail("OutcomeDistribution: ", labels_.size(), " labels vs ", probs_.size(), " probs");
    if (probs_.empty()) fail("OutcomeDistribution: empty");
    double sum = 0;
    for (std::size_t k = 0; k < probs_.size(); ++k) {
        require_finite(probs_[k], "OutcomeDistribution");
        if (probs_[k] < 0) {
            if (probs_[k] < -1e-12)
                fail("OutcomeDistribution: probability of '", labels_[k], "' is ", probs_[k]);
            probs_[k] = 0;  // round-off from traces
        }
        sum += probs_[k];
    }
    if (std::abs(sum - 1.0) > kTol.prob_sum)
        fail("OutcomeDistribution: probabilities sum to ", sum, ", not 1 within ",
             kTol.prob_sum);
}

}  // namespace qpe
