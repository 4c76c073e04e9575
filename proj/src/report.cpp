#include "brcalc/report.hpp"

#include "brcalc/parse.hpp"
#include "brcalc/version.hpp"

namespace brcalc {

nlohmann::json to_json(const Int& v) { return v.str(); }

nlohmann::json to_json(const FitDiagnostics& d) {
    return {
        {"window_start", d.window_start},
        {"window_len", d.window_len},
        {"verified_through", d.verified_through},
        {"stable", d.stable},
    };
}

nlohmann::json to_json(const BinomialPoly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(c.str());
    return {{"degree", p.degree()}, {"coeffs", coeffs}, {"pretty", binomial_string(p)}};
}

nlohmann::json to_json(const MultiBinomialPoly& p) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [alpha, e] : p.coeffs) {
        std::string key;
        for (size_t i = 0; i < alpha.size(); ++i) {
            if (i) key += ",";
            key += std::to_string(alpha[i]);
        }
        coeffs[key] = e.str();
    }
    return {{"nvars", p.nvars}, {"maxdeg", p.maxdeg}, {"coeffs", coeffs}};
}

nlohmann::json to_json(const Ring& ring) {
    nlohmann::json rels = nlohmann::json::array();
    for (const Monomial& q : ring.relations()) rels.push_back(to_string(q, ring));
    return {{"dim", ring.dim()}, {"relations", rels}, {"krull_dim", ring.krull_dim()}};
}

nlohmann::json to_json(const NorthcottReport& report) {
    nlohmann::json j{
        {"schema", kReportSchema},
        {"d", report.d},
        {"r", report.r},
        {"colength_FM", report.colength_FM.str()},
        {"br", to_json(report.br)},
        {"br0", report.br0().str()},
        {"br1", report.br1().str()},
        {"slack", report.slack.str()},
        {"inequality_holds", report.inequality_holds},
        {"equality", report.equality},
        {"diagnostics", to_json(report.diagnostics)},
        {"warnings", report.warnings},
    };
    if (report.reduction_evidence) {
        const ReductionEvidence& e = *report.reduction_evidence;
        nlohmann::json ev{{"matrix", to_string(e.matrix)}, {"s_max", e.s_max}};
        if (e.reduction_number)
            ev["reduction_number"] = *e.reduction_number;
        else
            ev["reduction_number"] = nullptr;
        j["reduction_evidence"] = ev;
    }
    return j;
}

nlohmann::json to_json(const SallyTable& table) {
    nlohmann::json values = nlohmann::json::array();
    for (const Int& v : table.values) values.push_back(v.str());
    return {{"values", values}, {"all_zero", table.all_zero()}};
}

std::string binomial_string(const BinomialPoly& p) {
    const int D = p.degree();
    std::string out;
    for (int i = 0; i <= D; ++i) {
        const Int& b = p.coeff(i);
        if (b == 0) continue;
        Int shown = (i % 2 == 0) ? b : -b;
        std::string sign = shown < 0 ? "- " : "+ ";
        if (out.empty())
            out += (shown < 0) ? "-" : "";
        else
            out += " " + sign;
        Int mag = shown < 0 ? Int(-shown) : shown;
        int k = D - i;
        if (k == 0) {
            out += mag.str();
            continue;
        }
        out += mag.str() + "C(n";
        int shift = D - i - 1;
        if (shift > 0) out += "+" + std::to_string(shift);
        if (shift < 0) out += std::to_string(shift);
        out += "," + std::to_string(k) + ")";
    }
    return out.empty() ? "0" : out;
}

} // namespace brcalc
