#include "ppj/io/point_json.hpp"

#include "ppj/exact/parse.hpp"

#include <array>
#include <cmath>

namespace ppj {

namespace {

constexpr std::array<const char*, 3> kHopfFields{"alpha", "lambda", "nu"};
constexpr std::array<const char*, 5> kNonHopfFields{"alpha", "beta", "gamma", "delta", "mu"};

template <Scalar S, class Encode>
nlohmann::ordered_json encode(const PointData<S>& p, Encode enc)
{
    nlohmann::ordered_json j;
    j["c"] = enc(p.c());
    nlohmann::ordered_json shape;
    if (p.is_hopf()) {
        const auto& h = p.hopf_shape();
        shape["kind"] = "hopf";
        shape["alpha"] = enc(h.alpha);
        shape["lambda"] = enc(h.lambda);
        shape["nu"] = enc(h.nu);
    } else {
        const auto& n = p.nonhopf_shape();
        shape["kind"] = "nonhopf";
        shape["alpha"] = enc(n.alpha);
        shape["beta"] = enc(n.beta);
        shape["gamma"] = enc(n.gamma);
        shape["delta"] = enc(n.delta);
        shape["mu"] = enc(n.mu);
    }
    j["shape"] = std::move(shape);
    return j;
}

template <Scalar S, class Decode>
PointData<S> decode(const nlohmann::json& j, Decode dec)
{
    if (!j.is_object()) throw PointFormatError("point must be a JSON object");
    if (!j.contains("c")) throw PointFormatError("point is missing \"c\"");
    if (!j.contains("shape") || !j["shape"].is_object()) throw PointFormatError("point is missing \"shape\"");
    const auto& shape = j["shape"];
    if (!shape.contains("kind") || !shape["kind"].is_string()) {
        throw PointFormatError("shape is missing \"kind\" (hopf or nonhopf)");
    }
    auto field = [&](const char* name) -> S {
        if (!shape.contains(name)) throw PointFormatError(std::string("shape is missing \"") + name + "\"");
        return dec(shape[name], name);
    };
    const S c = dec(j["c"], "c");
    const std::string kind = shape["kind"];
    if (kind == "hopf") {
        return PointData<S>::hopf(c, field(kHopfFields[0]), field(kHopfFields[1]), field(kHopfFields[2]));
    }
    if (kind == "nonhopf") {
        return PointData<S>::nonhopf(c, field(kNonHopfFields[0]), field(kNonHopfFields[1]),
                                     field(kNonHopfFields[2]), field(kNonHopfFields[3]),
                                     field(kNonHopfFields[4]));
    }
    throw PointFormatError("unknown shape kind '" + kind + "' (valid: hopf, nonhopf)");
}

}  // namespace

nlohmann::ordered_json point_to_json(const ExactPoint& p)
{
    return encode(p, [](const RationalFunction& x) { return x.to_string(); });
}

nlohmann::ordered_json point_to_json(const PointData<double>& p)
{
    return encode(p, [](double x) { return x; });
}

ExactPoint exact_point_from_json(const nlohmann::json& j)
{
    return decode<RationalFunction>(j, [](const nlohmann::json& v, const char* name) {
        if (v.is_string()) {
            try {
                return parse_expression(v.get<std::string>());
            } catch (const std::exception& e) {
                throw PointFormatError(std::string("field \"") + name + "\": " + e.what());
            }
        }
        if (v.is_number_integer()) return RationalFunction(Rational(v.dump()));
        throw PointFormatError(std::string("field \"") + name + "\" must be an expression string or integer");
    });
}

PointData<double> float_point_from_json(const nlohmann::json& j)
{
    return decode<double>(j, [](const nlohmann::json& v, const char* name) {
        if (v.is_number()) {
            double x = v.get<double>();
            if (!std::isfinite(x)) throw PointFormatError(std::string("field \"") + name + "\" is not finite");
            return x;
        }
        if (v.is_string()) {
            try {
                RationalFunction e = parse_expression(v.get<std::string>());
                if (e.is_constant()) return e.constant_value().get_d();
            } catch (const std::exception&) {
            }
        }
        throw PointFormatError(std::string("field \"") + name + "\" must be a number");
    });
}

}  // namespace ppj
