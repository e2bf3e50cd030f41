// Exceptions thrown by the semichain library.

#ifndef SEMICHAIN_EXCEPTION_HPP_
#define SEMICHAIN_EXCEPTION_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace semichain {

  //! Base class of every exception thrown by semichain.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed text or JSON input.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  class IndexOutOfRange : public Error {
   public:
    using Error::Error;
  };

  //! A multiplication table failed the associativity check; the offending
  //! triple is kept so callers can report it.
  class NonAssociative : public Error {
   public:
    NonAssociative(size_t a, size_t b, size_t c);

    size_t a;
    size_t b;
    size_t c;
  };

  class SizeCapExceeded : public Error {
   public:
    using Error::Error;
  };

  class UnsupportedFamily : public Error {
   public:
    using Error::Error;
  };

  class NotAnIdeal : public Error {
   public:
    using Error::Error;
  };

  class NotInverse : public Error {
   public:
    using Error::Error;
  };

  class NotAGroup : public Error {
   public:
    using Error::Error;
  };

  class SearchTooLarge : public Error {
   public:
    using Error::Error;
  };

  //! An exhaustive search ran out of its SearchBudget.
  class BudgetExceeded : public Error {
   public:
    BudgetExceeded(std::string const& what, size_t enumerated);

    size_t enumerated;
  };

  class NotDecomposable : public Error {
   public:
    using Error::Error;
  };

  class MissingExactValues : public Error {
   public:
    using Error::Error;
  };

  class TableTooLarge : public Error {
   public:
    using Error::Error;
  };

}  // namespace semichain

#endif  // SEMICHAIN_EXCEPTION_HPP_
