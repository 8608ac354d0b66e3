#include "hexalab/field.hpp"

#include <cstdlib>

namespace hexalab {

namespace {

std::uint64_t parse_u64(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw FieldSpecError("expected a decimal number, got '" + s + "'");
    errno = 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (errno != 0 || end != s.c_str() + s.size())
        throw FieldSpecError("number out of range: '" + s + "'");
    return v;
}

} // namespace

FieldSpec parse_field_spec(const std::string& text) {
    FieldSpec spec;
    if (text == "q") {
        spec.kind = FieldSpec::Kind::rational;
        return spec;
    }
    if (text.rfind("p=", 0) == 0) {
        spec.kind = FieldSpec::Kind::prime;
        spec.modulus = parse_u64(text.substr(2));
        PrimeField check(spec.modulus); // validates primality and range
        return spec;
    }
    if (text.rfind("gf2=", 0) == 0) {
        spec.kind = FieldSpec::Kind::binary;
        std::uint64_t k = parse_u64(text.substr(4));
        if (k < 8 || k > 63)
            throw FieldSpecError("binary field degree must be in [8, 63], got " + text.substr(4));
        spec.degree = static_cast<int>(k);
        return spec;
    }
    throw FieldSpecError("bad field spec '" + text + "' (expected p=<prime> | gf2=<k> | q)");
}

} // namespace hexalab
