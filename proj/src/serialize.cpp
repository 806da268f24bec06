#include "waring/serialize.hpp"

#include <sstream>

namespace waring {

Json to_json(const Cyc& c) {
    Json coeffs = Json::array();
    for (const auto& q : c.coefficients()) coeffs.push_back(q.get_str());
    return Json{{"d", c.order()}, {"coeffs", std::move(coeffs)}};
}

Cyc cyc_from_json(const Json& j) {
    const int order = j.at("d").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& s : j.at("coeffs")) {
        Rational q;
        if (q.set_str(s.get<std::string>(), 10) != 0) throw DomainError("cyc_from_json: malformed rational");
        q.canonicalize();
        coeffs.push_back(q);
    }
    return Cyc::from_coefficients(order, coeffs);
}

Json coeff_to_json(const Cyc& c) {
    Json out;
    if (const auto q = c.as_rational()) {
        out["num"] = q->get_num().get_str();
        out["den"] = q->get_den().get_str();
    } else {
        out["num"] = nullptr;
        out["den"] = nullptr;
    }
    out["root_power_combination"] = to_json(c);
    return out;
}

Json to_json(const LinForm& form) {
    Json out = Json::array();
    for (const auto& [v, c] : form.support()) out.push_back(Json::array({v.row, v.col, to_json(c)}));
    return out;
}

LinForm form_from_json(const Json& j, int d, int order) {
    LinForm form(d, order);
    for (const auto& entry : j) {
        const int row = entry.at(0).get<int>();
        const int col = entry.at(1).get<int>();
        Cyc c = cyc_from_json(entry.at(2));
        if (c.order() != order) throw DomainError("form_from_json: entry lives in a different field");
        form.coeffs()(row, col) = std::move(c);
    }
    return form;
}

Json to_json(const PowerDecomposition& dec) {
    Json terms = Json::array();
    for (const auto& term : dec.terms) {
        Json index;
        if (term.index.perm) {
            index["perm"] = std::vector<int>(term.index.perm->images().begin(), term.index.perm->images().end());
        } else {
            index["perm"] = nullptr;
        }
        index["j"] = term.index.j;
        index["signs"] = term.index.signs;
        terms.push_back(Json{{"index", std::move(index)},
                             {"coeff", coeff_to_json(term.coeff)},
                             {"form", to_json(term.form)},
                             {"exponent", term.exponent}});
    }
    return Json{{"d", dec.d},
                {"scheme", std::string(to_string(dec.scheme))},
                {"scale", dec.scale.get_str()},
                {"target", std::string(to_string(dec.target))},
                {"order", dec.order},
                {"terms", std::move(terms)}};
}

PowerDecomposition decomposition_from_json(const Json& j) {
    PowerDecomposition dec;
    dec.d = j.at("d").get<int>();
    dec.order = j.at("order").get<int>();
    const auto scheme = parse_scheme(j.at("scheme").get<std::string>());
    const auto target = parse_target(j.at("target").get<std::string>());
    if (!scheme || !target) throw DomainError("decomposition_from_json: unknown scheme or target");
    dec.scheme = *scheme;
    dec.target = *target;
    dec.scale = Integer(j.at("scale").get<std::string>());
    for (const auto& t : j.at("terms")) {
        PowerTerm term;
        const auto& index = t.at("index");
        if (!index.at("perm").is_null()) term.index.perm = Perm(index.at("perm").get<std::vector<int>>());
        term.index.j = index.at("j").get<int>();
        term.index.signs = index.at("signs").get<std::vector<int>>();
        term.coeff = cyc_from_json(t.at("coeff").at("root_power_combination"));
        term.form = form_from_json(t.at("form"), dec.d, dec.order);
        term.exponent = t.at("exponent").get<int>();
        dec.terms.push_back(std::move(term));
    }
    return dec;
}

Json to_json(const ProductDecomposition& pd) {
    Json terms = Json::array();
    for (const auto& term : pd.terms) {
        Json factors = Json::array();
        for (const auto& f : term.factors) factors.push_back(to_json(f));
        terms.push_back(Json{{"sign", term.sign}, {"factors", std::move(factors)}});
    }
    return Json{{"d", pd.d}, {"scheme", "krishna-makam"}, {"target", "det"}, {"terms", std::move(terms)}};
}

// ---------------------------------------------------------------------------

namespace {

std::string latex_var(const VarId& v) {
    return "x_{" + std::to_string(v.row) + "," + std::to_string(v.col) + "}";
}

std::string latex_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return "\\tfrac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string latex_root(int k) {
    if (k == 0) return "";
    if (k == 1) return "\\omega";
    return "\\omega^{" + std::to_string(k) + "}";
}

// Coefficient-times-variable with its leading sign separated out.
std::pair<bool, std::string> latex_scaled(const Cyc& c, const std::string& var) {
    const auto join = [&](const std::string& scalar) { return scalar.empty() || var.empty() ? scalar + var : scalar + " " + var; };
    if (const auto q = c.as_rational()) {
        const Rational mag = abs(*q);
        return {*q < 0, join(mag == 1 ? "" : latex_rational(mag))};
    }
    if (const auto k = c.as_root_power()) return {false, join(latex_root(*k))};
    if (const auto k = (-c).as_root_power()) return {true, join(latex_root(*k))};
    return {false, join("(" + to_latex(c) + ")")};
}

std::string latex_form(const LinForm& form) {
    std::string out;
    bool first = true;
    for (const auto& [v, c] : form.support()) {
        const auto [negative, body] = latex_scaled(c, latex_var(v));
        if (first) {
            out += negative ? "-" + body : body;
        } else {
            out += negative ? " - " + body : " + " + body;
        }
        first = false;
    }
    return first ? "0" : out;
}

std::string text_form(const LinForm& form) {
    std::string out;
    bool first = true;
    for (const auto& [v, c] : form.support()) {
        const std::string var = "x" + std::to_string(v.row) + std::to_string(v.col);
        std::string body;
        bool negative = false;
        if (c.is_one()) {
            body = var;
        } else if ((-c).is_one()) {
            body = var;
            negative = true;
        } else {
            body = "(" + c.to_string() + ")*" + var;
        }
        out += first ? (negative ? "-" : "") + body : (negative ? " - " : " + ") + body;
        first = false;
    }
    return first ? "0" : out;
}

std::string latex_target(const PowerDecomposition& dec) {
    if (dec.target == Target::Determinant) return "\\det_{" + std::to_string(dec.d) + "}";
    std::string out;
    for (int i = 1; i <= dec.d; ++i) out += latex_var({i, i});
    return out;
}

}  // namespace

std::string to_latex(const Cyc& c) {
    std::string out;
    bool first = true;
    const auto coeffs = c.coefficients();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        const Rational mag = abs(coeffs[i]);
        const std::string root = latex_root(static_cast<int>(i));
        std::string body = root.empty() ? latex_rational(mag) : (mag == 1 ? root : latex_rational(mag) + root);
        out += first ? (coeffs[i] < 0 ? "-" : "") + body : (coeffs[i] < 0 ? " - " : " + ") + body;
        first = false;
    }
    return first ? "0" : out;
}

std::string to_latex(const PowerDecomposition& dec) {
    std::ostringstream out;
    out << "\\begin{align*}\n";
    out << dec.scale.get_str() << "\\," << latex_target(dec) << " &=";
    for (std::size_t t = 0; t < dec.terms.size(); ++t) {
        const auto& term = dec.terms[t];
        const auto [negative, scalar] = latex_scaled(term.coeff, "");
        if (t > 0 && t % 2 == 0) out << " \\\\\n&\\quad";
        out << (negative ? " - " : (t == 0 ? " " : " + "));
        if (!scalar.empty()) out << scalar;
        out << "\\left(" << latex_form(term.form) << "\\right)^{" << term.exponent << "}";
    }
    out << "\n\\end{align*}\n";
    return out.str();
}

std::string to_latex(const ProductDecomposition& pd) {
    std::ostringstream out;
    out << "\\begin{align*}\n\\det_{" << pd.d << "} &=";
    for (std::size_t t = 0; t < pd.terms.size(); ++t) {
        const auto& term = pd.terms[t];
        if (t > 0) out << " \\\\\n&\\quad";
        out << (term.sign < 0 ? " - " : (t == 0 ? " " : " + "));
        for (const auto& f : term.factors) {
            if (f.support().size() == 1 && f.support()[0].second.is_one()) {
                out << latex_form(f);
            } else {
                out << "\\left(" << latex_form(f) << "\\right)";
            }
        }
    }
    out << "\n\\end{align*}\n";
    return out.str();
}

std::string to_text(const PowerDecomposition& dec) {
    std::ostringstream out;
    out << dec.scale.get_str() << " * " << (dec.target == Target::Determinant ? "det" + std::to_string(dec.d) : "x11*...*xdd")
        << " = sum of " << dec.terms.size() << " terms:\n";
    for (const auto& term : dec.terms) {
        std::string scalar;
        if (term.coeff.is_one()) {
            scalar = "+";
        } else if ((-term.coeff).is_one()) {
            scalar = "-";
        } else {
            scalar = "+ (" + term.coeff.to_string() + ")";
        }
        out << scalar << " (" << text_form(term.form) << ")^" << term.exponent << "\n";
    }
    return out.str();
}

std::string to_text(const ProductDecomposition& pd) {
    std::ostringstream out;
    out << "det" << pd.d << " = sum of " << pd.terms.size() << " products:\n";
    for (const auto& term : pd.terms) {
        out << (term.sign < 0 ? "-" : "+");
        for (const auto& f : term.factors) out << " (" << text_form(f) << ")";
        out << "\n";
    }
    return out.str();
}

}  // namespace waring
