#include "macdonald/io.hpp"

#include <fstream>
#include <sstream>

namespace macd {

json poly_to_json(const PolyQT& p) {
    json a = json::array();
    for (const auto& t : p.terms()) a.push_back({t.dq, t.dt, t.c.get_str()});
    return a;
}

PolyQT poly_from_json(const json& j) {
    std::vector<PolyQT::Term> terms;
    for (const auto& t : j) terms.push_back({t.at(0).get<int>(), t.at(1).get<int>(), IntZ(t.at(2).get<std::string>())});
    return PolyQT::from_terms(std::move(terms));
}

json qtrat_to_json(const QTRat& r) {
    json f = json::array();
    for (const auto& [k, e] : r.den_factors()) f.push_back({k.a, k.b, k.d, e});
    return {{"text", r.str()},
            {"num", poly_to_json(r.num())},
            {"den_int", r.den_int().get_str()},
            {"den_factors", f},
            {"den_extra", poly_to_json(r.den_extra())}};
}

QTRat qtrat_from_json(const json& j) {
    FactorMap f;
    for (const auto& x : j.at("den_factors")) f[{x.at(0).get<int>(), x.at(1).get<int>(), x.at(2).get<int>()}] = x.at(3).get<int>();
    return QTRat::from_parts(poly_from_json(j.at("num")), IntZ(j.at("den_int").get<std::string>()), std::move(f),
                             poly_from_json(j.at("den_extra")));
}

json filling_to_json(const Filling& s) {
    json cols = json::array();
    for (const auto& col : s.cols) {
        json c = json::array();
        for (Letter a : col) c.push_back(letter_to_int(a));
        cols.push_back(c);
    }
    return {{"partition", s.shape.parts}, {"columns", cols}};
}

Filling filling_from_json(const json& j) {
    auto cols = j.at("columns").get<std::vector<std::vector<int>>>();
    Filling s = Filling::from_ints(cols);
    if (j.contains("partition") && j.at("partition").get<std::vector<int>>() != s.shape.parts)
        throw std::invalid_argument("partition does not match the column heights");
    return s;
}

Filling parse_filling_any(const std::string& text) {
    auto p = text.find_first_not_of(" \t\r\n");
    if (p != std::string::npos && text[p] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw std::invalid_argument(std::string("bad filling JSON: ") + e.what());
        }
        return filling_from_json(j);
    }
    return parse_filling_text(text);
}

json mlq_to_json(const MultilineQueue& m) {
    json rows = json::array();
    for (const auto& r : m.rows) rows.push_back({{"columns", r.columns}, {"pairs", r.pairs}, {"labels", r.labels}});
    return {{"partition", m.shape.parts}, {"n", m.n}, {"rows", rows}};
}

MultilineQueue mlq_from_json(const json& j) {
    MultilineQueue m;
    m.n = j.at("n").get<int>();
    for (const auto& r : j.at("rows"))
        m.rows.push_back({r.at("columns").get<std::vector<int>>(), r.at("pairs").get<std::vector<int>>(),
                          r.at("labels").get<std::vector<int>>()});
    if (j.contains("partition")) {
        m.shape = Partition(j.at("partition").get<std::vector<int>>());
    } else {
        // bottom-row labels are the column heights
        if (m.rows.empty()) throw std::invalid_argument("multiline queue has no rows");
        m.shape = Partition(m.rows.front().labels);
    }
    return m;
}

json outcomes_to_json(const OutcomeSet& o) {
    json a = json::array();
    for (const auto& x : o) a.push_back({{"filling", filling_to_json(x.filling)}, {"prob", qtrat_to_json(x.prob)}});
    return a;
}

namespace {

template <class C, class F>
json terms_json(const XPolyT<C>& p, bool msym, F&& coeff) {
    json terms = json::array();
    if (msym) {
        for (const auto& [mu, c] : xpoly_to_msym(p)) terms.push_back({{"partition", mu}, {"coeff", coeff(c)}});
    } else {
        for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coeff", coeff(c)}});
    }
    return {{"n_vars", p.n_vars()}, {"basis", msym ? "msym" : "monomial"}, {"terms", terms}};
}

template <class C, class F>
std::string terms_text(const XPolyT<C>& p, bool msym, F&& coeff) {
    std::ostringstream os;
    if (msym) {
        for (const auto& [mu, c] : xpoly_to_msym(p)) os << "m[" << Partition(mu).str() << "] " << coeff(c) << '\n';
    } else {
        for (const auto& [e, c] : p.terms()) os << "x^" << exps_str(e) << ' ' << coeff(c) << '\n';
    }
    if (p.is_zero()) os << "0\n";
    return os.str();
}

}  // namespace

json xpoly_to_json(const XPoly& p, bool msym) {
    return terms_json(p, msym, [](const QTRat& c) { return qtrat_to_json(c); });
}

json jack_to_json(const JackPoly& p, bool msym) {
    return terms_json(p, msym, [](const PolyAlpha& c) {
        json a = json::array();
        for (const auto& x : c.coeffs()) a.push_back(x.get_str());
        return json{{"text", c.str()}, {"alpha_coeffs", a}};
    });
}

std::string xpoly_to_text(const XPoly& p, bool msym) {
    return terms_text(p, msym, [](const QTRat& c) { return c.str(); });
}

std::string jack_to_text(const JackPoly& p, bool msym) {
    return terms_text(p, msym, [](const PolyAlpha& c) { return c.str(); });
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace macd
