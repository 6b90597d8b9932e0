#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qbf {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error taxonomy shared by the CLI (exit codes 1/2/3/4).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_applicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct verification_mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct invariant_violation : std::logic_error {
    using std::logic_error::logic_error;
};

inline std::string rat_to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

} // namespace qbf
