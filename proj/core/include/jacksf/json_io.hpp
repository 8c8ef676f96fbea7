#pragma once

#include <string>

#include "json.hpp"

#include "jacksf/finite_n.hpp"
#include "jacksf/symfun.hpp"
#include "jacksf/upoly.hpp"

namespace jacksf {

using nlohmann::json;

// AlphaRat wire format: {"num": [[k, "p/q"], ...], "den": [[k, "p/q"], ...]}
// listing nonzero coefficients by power of α in increasing order.
json alpha_poly_to_json(const AlphaPoly& poly);
AlphaPoly alpha_poly_from_json(const json& data);

json coeff_to_json(const AlphaRat& value);
// NumericAlpha serializes as a constant AlphaRat, so numeric-mode output
// round-trips through the same schema.
json coeff_to_json(const NumericAlpha& value);

template <CoeffField F>
F coeff_from_json(const json& data);
template <>
AlphaRat coeff_from_json<AlphaRat>(const json& data);
template <>
NumericAlpha coeff_from_json<NumericAlpha>(const json& data);

json partition_to_json(const Partition& la);
Partition partition_from_json(const json& data);

// SymFun wire format:
// {"basis":"m"|"p","terms":[{"partition":[3,1],"coeff":<AlphaRat>}...]}
// with terms in reverse lexicographic partition order.
template <CoeffField F>
json symfun_to_json(const SymFunT<F>& f) {
    json terms = json::array();
    for (const auto& [la, c] : f.terms())
        terms.push_back({{"partition", partition_to_json(la)}, {"coeff", coeff_to_json(c)}});
    return {{"basis", basis_name(f.basis())}, {"terms", terms}};
}

template <CoeffField F>
SymFunT<F> symfun_from_json(const json& data) {
    // A bare number is accepted as a constant (so `--in 1` works).
    if (data.is_number_integer())
        return SymFunT<F>::constant(F::from_int(data.get<long>()), Basis::p);
    if (data.is_string())
        return SymFunT<F>::constant(F::from_rat(rat_from_string(data.get<std::string>())),
                                    Basis::p);
    if (!data.is_object() || !data.contains("basis") || !data.contains("terms"))
        throw argument_error("SymFun JSON must carry \"basis\" and \"terms\"");
    std::string basis_text = data.at("basis").get<std::string>();
    Basis basis;
    if (basis_text == "m")
        basis = Basis::m;
    else if (basis_text == "p")
        basis = Basis::p;
    else
        throw argument_error("unknown basis: " + basis_text);
    SymFunT<F> f(basis);
    for (const auto& term : data.at("terms")) {
        Partition la = partition_from_json(term.at("partition"));
        f.add_term(la, coeff_from_json<F>(term.at("coeff")));
    }
    return f;
}

// UPolyRat wire format mirrors AlphaRat with AlphaRat-valued coefficients:
// {"num": [[k, <coeff>], ...], "den": [[k, <coeff>], ...]}
template <CoeffField F>
json upoly_to_json(const UPoly<F>& poly) {
    json list = json::array();
    for (int k = 0; k <= poly.degree(); ++k) {
        F c = poly.coeff(k);
        if (!c.is_zero())
            list.push_back(json::array({k, coeff_to_json(c)}));
    }
    return list;
}

template <CoeffField F>
json upolyrat_to_json(const UPolyRat<F>& value) {
    return {{"num", upoly_to_json(value.num())}, {"den", upoly_to_json(value.den())}};
}

// PsiInstance wire format: {"x": ["2","3"], "psi": ["1"]}
json psi_instance_to_json(const PsiInstance& inst);
PsiInstance psi_instance_from_json(const json& data);

} // namespace jacksf
