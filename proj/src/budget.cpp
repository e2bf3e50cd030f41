#include "semichain/budget.hpp"

#include <stdexcept>  // for invalid_argument

namespace semichain {

  void SearchBudget::validate() const {
    if (max_subsemigroups == 0 || max_millis == 0 || threads == 0) {
      throw std::invalid_argument("every search budget field must be >= 1");
    }
  }

}  // namespace semichain
