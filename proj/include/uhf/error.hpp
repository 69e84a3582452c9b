#ifndef UHF_ERROR_HPP
#define UHF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace uhf {

/// Failure categories used across the library. Each maps to a process exit
/// code so the CLI can report the class of failure uniformly.
enum class Err {
    BadParams,
    NotPrimePower,
    DivisionByZero,
    NoSuchVector,
    TooLarge,
    TooSmall,
    NoGroup,
    AllOnesNotInCode,
    Inapplicable,
    OutOfRange,
    NegativeDiscriminant,
    RangeTooLarge,
    Overflow,
    Parse,
};

class Error : public std::runtime_error {
  public:
    Error(Err kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

    Err kind() const noexcept { return kind_; }

    /// 2 = precondition violation, 3 = resource cap, 4 = parse error.
    int exit_code() const noexcept {
        switch (kind_) {
            case Err::TooLarge:
            case Err::RangeTooLarge:
                return 3;
            case Err::Parse:
                return 4;
            default:
                return 2;
        }
    }

  private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

inline const char* err_name(Err kind) {
    switch (kind) {
        case Err::BadParams: return "BadParams";
        case Err::NotPrimePower: return "NotPrimePower";
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::NoSuchVector: return "NoSuchVector";
        case Err::TooLarge: return "TooLarge";
        case Err::TooSmall: return "TooSmall";
        case Err::NoGroup: return "NoGroup";
        case Err::AllOnesNotInCode: return "AllOnesNotInCode";
        case Err::Inapplicable: return "Inapplicable";
        case Err::OutOfRange: return "OutOfRange";
        case Err::NegativeDiscriminant: return "NegativeDiscriminant";
        case Err::RangeTooLarge: return "RangeTooLarge";
        case Err::Overflow: return "Overflow";
        case Err::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace uhf

#endif
