#include "jacksf/json_io.hpp"

namespace jacksf {

json alpha_poly_to_json(const AlphaPoly& poly) {
    json list = json::array();
    for (int k = 0; k <= poly.degree(); ++k) {
        Rat c = poly.coeff(k);
        if (c != 0)
            list.push_back(json::array({k, rat_to_string(c)}));
    }
    return list;
}

AlphaPoly alpha_poly_from_json(const json& data) {
    if (!data.is_array())
        throw argument_error("polynomial JSON must be a list of [power, rational] pairs");
    std::vector<Rat> coeffs;
    for (const auto& entry : data) {
        if (!entry.is_array() || entry.size() != 2)
            throw argument_error("polynomial JSON entries must be [power, rational] pairs");
        int power = entry.at(0).get<int>();
        if (power < 0)
            throw argument_error("negative power of α");
        Rat value = rat_from_string(entry.at(1).get<std::string>());
        if (static_cast<int>(coeffs.size()) <= power)
            coeffs.resize(static_cast<size_t>(power) + 1, Rat(0));
        coeffs[static_cast<size_t>(power)] += value;
    }
    return AlphaPoly(std::move(coeffs));
}

json coeff_to_json(const AlphaRat& value) {
    return {{"num", alpha_poly_to_json(value.num())}, {"den", alpha_poly_to_json(value.den())}};
}

json coeff_to_json(const NumericAlpha& value) {
    return {{"num", json::array({json::array({0, rat_to_string(value.value())})})},
            {"den", json::array({json::array({0, "1"})})}};
}

template <>
AlphaRat coeff_from_json<AlphaRat>(const json& data) {
    if (data.is_string())
        return AlphaRat::from_rat(rat_from_string(data.get<std::string>()));
    if (data.is_number_integer())
        return AlphaRat::from_int(data.get<long>());
    if (!data.is_object() || !data.contains("num") || !data.contains("den"))
        throw argument_error("coefficient JSON must carry \"num\" and \"den\"");
    return AlphaRat(alpha_poly_from_json(data.at("num")), alpha_poly_from_json(data.at("den")));
}

template <>
NumericAlpha coeff_from_json<NumericAlpha>(const json& data) {
    // Symbolic input stays readable under --alpha: evaluate at the set value.
    AlphaRat symbolic = coeff_from_json<AlphaRat>(data);
    return NumericAlpha(symbolic.eval_at(NumericAlpha::alpha().value()));
}

json partition_to_json(const Partition& la) {
    json list = json::array();
    for (int p : la.parts())
        list.push_back(p);
    return list;
}

Partition partition_from_json(const json& data) {
    if (!data.is_array())
        throw argument_error("partition JSON must be a list of parts");
    std::vector<int> parts;
    for (const auto& entry : data) {
        int value = entry.get<int>();
        if (value <= 0)
            throw argument_error("partition parts must be positive");
        parts.push_back(value);
    }
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1])
            throw argument_error("partition parts must be weakly decreasing");
    return Partition(std::move(parts));
}

json psi_instance_to_json(const PsiInstance& inst) {
    json x = json::array();
    for (const Rat& v : inst.xvals)
        x.push_back(rat_to_string(v));
    json psi = json::array();
    for (const Rat& v : inst.psivals)
        psi.push_back(rat_to_string(v));
    return {{"x", x}, {"psi", psi}};
}

PsiInstance psi_instance_from_json(const json& data) {
    if (!data.is_object() || !data.contains("x"))
        throw argument_error("PsiInstance JSON must carry \"x\" and \"psi\"");
    PsiInstance inst;
    for (const auto& entry : data.at("x"))
        inst.xvals.push_back(rat_from_string(entry.get<std::string>()));
    if (data.contains("psi"))
        for (const auto& entry : data.at("psi"))
            inst.psivals.push_back(rat_from_string(entry.get<std::string>()));
    validate_psi_instance(inst);
    return inst;
}

} // namespace jacksf
