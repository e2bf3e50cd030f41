// Resource limits for the exhaustive searches.

#ifndef SEMICHAIN_BUDGET_HPP_
#define SEMICHAIN_BUDGET_HPP_

#include <chrono>   // for steady_clock
#include <cstddef>  // for size_t

namespace semichain {

  //! Limits for an exhaustive search. Every field must be at least 1.
  struct SearchBudget {
    //! Maximum number of objects (subsemigroups, search nodes) to visit.
    size_t max_subsemigroups = 2'000'000;
    size_t max_millis        = 60'000;
    size_t threads           = 1;

    void validate() const;
  };

  //! Wall clock deadline derived from a SearchBudget.
  class Deadline {
   public:
    explicit Deadline(size_t millis)
        : _end(std::chrono::steady_clock::now()
               + std::chrono::milliseconds(millis)) {}

    bool passed() const {
      return std::chrono::steady_clock::now() > _end;
    }

   private:
    std::chrono::steady_clock::time_point _end;
  };

}  // namespace semichain

#endif  // SEMICHAIN_BUDGET_HPP_
