#include "drawkit/common.hpp"
#include "drawkit/rational.hpp"

#include <cstdlib>
#include <stdexcept>

namespace drawkit {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::UnrealizableQuadruple: return "UnrealizableQuadruple";
        case Errc::SubsetTooSmall: return "SubsetTooSmall";
        case Errc::TooLarge: return "TooLarge";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::DegeneratePointSet: return "DegeneratePointSet";
        case Errc::GaveUp: return "GaveUp";
        case Errc::IncomparableAtRequiredVertex: return "IncomparableAtRequiredVertex";
        case Errc::InconsistentInput: return "InconsistentInput";
        case Errc::CutBlocked: return "CutBlocked";
        case Errc::WrongFace: return "WrongFace";
        case Errc::InvalidDrawing: return "InvalidDrawing";
        case Errc::RangeTooWide: return "RangeTooWide";
        case Errc::NonTermination: return "NonTermination";
        case Errc::RealizationMismatch: return "RealizationMismatch";
        case Errc::BothDirectionsForbidden: return "BothDirectionsForbidden";
        case Errc::NotStronglyCMonotone: return "NotStronglyCMonotone";
        case Errc::InternalAssertion: return "InternalAssertion";
        case Errc::EdgeIsCrossed: return "EdgeIsCrossed";
        case Errc::BadRotation: return "BadRotation";
        case Errc::UnrenderableModel: return "UnrenderableModel";
        case Errc::Parse: return "Parse";
    }
    return "Unknown";
}

int size_cap(int fallback) {
    if (const char* env = std::getenv("DRAWKIT_MAX_N")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<int>(v);
    }
    return fallback;
}

Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0 || text.empty())
        throw Error(Errc::Parse, "not a rational: '" + text + "'");
    if (r.get_den() == 0) throw Error(Errc::Parse, "zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational floor(const Rational& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return Rational(q);
}

Rational frac(const Rational& r) { return r - floor(r); }

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace drawkit
