#ifndef GDALG_ERRORS_HPP
#define GDALG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdalg {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Input is not homogeneous of the weight an operation requires.
class WeightError : public Error {
  public:
    using Error::Error;
};

class NotLSError : public Error {
  public:
    using Error::Error;
};

// lie_nf met a leading word that is not Lyndon-Shirshov: the input was not a Lie element.
class NotLieElementError : public Error {
  public:
    using Error::Error;
};

// A normal form whose item counts do not add up.
class StructureError : public Error {
  public:
    using Error::Error;
};

// The leading coefficient of an expanded basis term is not +1 or -1.
class SignError : public Error {
  public:
    using Error::Error;
};

// A property the algorithms rely on (triangularity, termination) was violated.
class InvariantError : public Error {
  public:
    using Error::Error;
};

class SyntaxError : public Error {
  public:
    SyntaxError(std::string input, std::size_t offset, std::vector<std::string> expected)
        : Error(make_message(offset, expected)), input_(std::move(input)), offset_(offset),
          expected_(std::move(expected)) {}

    const std::string& input() const noexcept { return input_; }
    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

    // Two-line diagnostic: the input, then a caret under the offending byte.
    std::string caret_diagnostic() const {
        return input_ + "\n" + std::string(offset_, ' ') + "^";
    }

  private:
    static std::string make_message(std::size_t offset, const std::vector<std::string>& expected) {
        std::string msg = "syntax error at offset " + std::to_string(offset) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i) msg += i + 1 == expected.size() ? " or " : ", ";
            msg += expected[i];
        }
        return msg;
    }

    std::string input_;
    std::size_t offset_;
    std::vector<std::string> expected_;
};

} // namespace gdalg

#endif
