#pragma once

#include <stdexcept>
#include <string>

namespace gfano {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroConstantTerm : public Error {
 public:
  ZeroConstantTerm() : Error("divisor has zero constant term") {}
};

class NonzeroInnerConstant : public Error {
 public:
  NonzeroInnerConstant() : Error("inner series of a composition must have zero constant term") {}
};

class NotInvertible : public Error {
 public:
  NotInvertible() : Error("series is not compositionally invertible (valuation must be 1)") {}
};

class NonUnitConstant : public Error {
 public:
  NonUnitConstant() : Error("fractional power needs constant term exactly 1") {}
};

class WrongOffset : public Error {
 public:
  explicit WrongOffset(const std::string& what) : Error(what) {}
};

class OffsetMismatch : public Error {
 public:
  explicit OffsetMismatch(const std::string& what) : Error(what) {}
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label) : Error("unknown Hauptmodul label: " + label) {}
};

class UnknownFamily : public Error {
 public:
  explicit UnknownFamily(const std::string& key) : Error("unknown family: " + key) {}
};

class FreeShift : public Error {
 public:
  explicit FreeShift(const std::string& key)
      : Error("family " + key + " has no canonical shift") {}
};

class InconsistentIdentity : public Error {
 public:
  InconsistentIdentity(int order, const std::string& what)
      : Error("identity admits no solution at q^" + std::to_string(order) + ": " + what),
        order_(order) {}
  int order() const { return order_; }

 private:
  int order_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

class SumNot24 : public Error {
 public:
  explicit SumNot24(const std::string& what) : Error(what) {}
};

}  // namespace gfano
