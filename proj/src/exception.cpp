#include "semichain/exception.hpp"

namespace semichain {

  NonAssociative::NonAssociative(size_t a_, size_t b_, size_t c_)
      : Error("table is not associative: (" + std::to_string(a_) + " * "
              + std::to_string(b_) + ") * " + std::to_string(c_) + " != "
              + std::to_string(a_) + " * (" + std::to_string(b_) + " * "
              + std::to_string(c_) + ")"),
        a(a_),
        b(b_),
        c(c_) {}

  BudgetExceeded::BudgetExceeded(std::string const& what, size_t enumerated_)
      : Error(what + " (enumerated " + std::to_string(enumerated_) + ")"),
        enumerated(enumerated_) {}

}  // namespace semichain
