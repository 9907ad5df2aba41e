#pragma once
#include <stdexcept>
#include <string>

namespace period2 {

// Error kinds shared by the whole library.  CLI maps these to exit codes.
enum class ErrKind {
    NeedsFieldExtension,   // residue-field computation needs F_{2^{m*d}}
    NotDivisible,          // exact division in O impossible at certified valuation
    PrecisionExhausted,    // a decision would need digits beyond working precision
    SolutionSpaceTooLarge, // enumeration dimension exceeds the configured cap
    NoConvergence,         // fixed-point iteration hit its cap
    NotNilpotent,          // Lubin-Tate argument is not topologically nilpotent
    NotInSpan,             // coboundary not in the delta^+ monomial basis span
    IntegralityViolation,  // a provably 2-integral series produced an even denominator
    InternalInvariant,     // a theorem the code relies on failed numerically
    BadInput,              // malformed parameters / json
};

class Error : public std::runtime_error {
  public:
    Error(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    ErrKind kind;
    // extra payload for NeedsFieldExtension / SolutionSpaceTooLarge
    int detail = 0;
};

inline Error needs_field_extension(int degree, const std::string& where) {
    Error e(ErrKind::NeedsFieldExtension,
            where + ": needs residue field extension of degree " + std::to_string(degree));
    e.detail = degree;
    return e;
}

inline const char* errkind_name(ErrKind k) {
    switch (k) {
        case ErrKind::NeedsFieldExtension: return "NeedsFieldExtension";
        case ErrKind::NotDivisible: return "NotDivisible";
        case ErrKind::PrecisionExhausted: return "PrecisionExhausted";
        case ErrKind::SolutionSpaceTooLarge: return "SolutionSpaceTooLarge";
        case ErrKind::NoConvergence: return "NoConvergence";
        case ErrKind::NotNilpotent: return "NotNilpotent";
        case ErrKind::NotInSpan: return "NotInSpan";
        case ErrKind::IntegralityViolation: return "IntegralityViolation";
        case ErrKind::InternalInvariant: return "InternalInvariant";
        case ErrKind::BadInput: return "BadInput";
    }
    return "Unknown";
}

} // namespace period2
