#pragma once

#include <string>
#include <vector>

#include "qpe/common.hpp"

namespace qpe {

/** Labeled probability vector; probabilities sum to 1 within 1e-10. */
class OutcomeDistribution {
  public:
    OutcomeDistribution(std::vector<std::string> labels, std::vector<double> probs);

    int size() const { return static_cast<int>(probs_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<double>& probs() const { return probs_; }
    double prob(int k) const { return probs_[static_cast<std::size_t>(k)]; }
    const std::string& label(int k) const { return labels_[static_cast<std::size_t>(k)]; }

  private:
    std::vector<std::string> labels_;
    std::vector<double> probs_;
};

}  // namespace qpe
