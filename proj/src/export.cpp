#include "gfc/canonical_ideal.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace gfc {

using nlohmann::json;

std::string variable_name(const IndexTuple& t)
{
    std::string s = "z_" + std::to_string(t.r);
    for (int v : t.a)
        s += "_" + std::to_string(v);
    return s;
}

ExportFormat parse_export_format(const std::string& s)
{
    if (s == "json")
        return ExportFormat::Json;
    if (s == "cas-text")
        return ExportFormat::CasText;
    throw std::invalid_argument("unknown export format '" + s + "'");
}

namespace {

json tuple_json(const IndexTuple& t)
{
    json arr = json::array({t.r});
    for (int v : t.a)
        arr.push_back(v);
    return arr;
}

IndexTuple tuple_from_json(const json& j)
{
    IndexTuple t;
    t.r = j.at(0).get<int>();
    for (std::size_t i = 1; i < j.size(); ++i)
        t.a.push_back(j.at(i).get<int>());
    return t;
}

json relation_json(const PrimeField& F, const Relation& rel)
{
    json terms = json::array();
    for (const auto& term : rel.terms) {
        json factors = json::array();
        for (const auto& f : term.monomial.factors)
            factors.push_back(tuple_json(f));
        terms.push_back({{"coeff", F.reduce(term.coeff)}, {"factors", factors}});
    }
    return terms;
}

std::string monomial_text(const MonomialKey& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.factors.size();) {
        std::size_t j = i;
        while (j < m.factors.size() && m.factors[j] == m.factors[i])
            ++j;
        if (!out.empty())
            out += "*";
        out += variable_name(m.factors[i]);
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string relation_text(const Relation& rel)
{
    std::string out;
    for (std::size_t i = 0; i < rel.terms.size(); ++i) {
        const auto& term = rel.terms[i];
        const bool lambda_term = rel.kind == RelationKind::Trinomial && i == 0;
        std::string body = monomial_text(term.monomial);
        if (lambda_term)
            body = "l" + std::to_string(rel.index) + "*" + body;
        if (i == 0)
            out += (term.coeff < 0 ? "-" : "") + body;
        else
            out += (term.coeff < 0 ? " - " : " + ") + body;
    }
    return out;
}

} // namespace

std::string export_ideal(const CurveParams& params, ExportFormat format)
{
    const DegreeTwoSpace space(params.k, params.n);
    const auto binomials = generate_binomials(space);
    const auto trinomials = generate_trinomials(params, space);
    const auto F = params.field();

    if (format == ExportFormat::Json) {
        json doc;
        doc["k"] = params.k;
        doc["n"] = params.n;
        doc["p"] = params.p;
        doc["lambda"] = params.lambda;
        doc["variables"] = json::array();
        for (const auto& v : space.variables())
            doc["variables"].push_back(tuple_json(v));
        doc["binomials"] = json::array();
        for (const auto& r : binomials)
            doc["binomials"].push_back(relation_json(F, r));
        doc["trinomials"] = json::array();
        for (const auto& r : trinomials)
            doc["trinomials"].push_back(relation_json(F, r));
        return doc.dump(1) + "\n";
    }

    std::ostringstream os;
    os << "// k=" << params.k << " n=" << params.n << " p=" << params.p << "\n";
    os << "// lambda:";
    for (std::size_t i = 0; i < params.lambda.size(); ++i)
        os << " l" << i + 1 << "=" << params.lambda[i];
    os << " (mod p)\n";
    os << "// variables=" << space.variables().size() << " binomials=" << binomials.size() << " trinomials=" << trinomials.size()
       << "\n";
    os << "ring R = (0";
    for (std::size_t i = 0; i < params.lambda.size(); ++i)
        os << ",l" << i + 1;
    os << "),(";
    for (std::size_t i = 0; i < space.variables().size(); ++i)
        os << (i ? "," : "") << variable_name(space.variables()[i]);
    os << "),dp;\n";
    os << "ideal I =\n";
    const std::size_t total = binomials.size() + trinomials.size();
    std::size_t written = 0;
    for (const auto* list : {&binomials, &trinomials})
        for (const auto& rel : *list)
            os << relation_text(rel) << (++written == total ? ";" : ",") << "\n";
    if (total == 0)
        os << "0;\n";
    return os.str();
}

ExportedIdeal parse_ideal_json(const std::string& text)
{
    const auto doc = json::parse(text);
    ExportedIdeal out;
    out.k = doc.at("k").get<int>();
    out.n = doc.at("n").get<int>();
    out.p = doc.at("p").get<Elem>();
    out.lambda = doc.at("lambda").get<std::vector<Elem>>();
    for (const auto& v : doc.at("variables"))
        out.variables.push_back(tuple_from_json(v));

    const PrimeField F(out.p);
    auto read_terms = [](const json& rel) {
        std::vector<Term> terms;
        for (const auto& term : rel) {
            std::vector<IndexTuple> factors;
            for (const auto& f : term.at("factors"))
                factors.push_back(tuple_from_json(f));
            terms.push_back({term.at("coeff").get<std::int64_t>(), MonomialKey::make(std::move(factors))});
        }
        return terms;
    };
    for (const auto& rel : doc.at("binomials")) {
        auto terms = read_terms(rel);
        // stored as residues; binomials carry (1, -1)
        for (auto& t : terms)
            if (static_cast<Elem>(t.coeff) == out.p - 1)
                t.coeff = -1;
        out.binomials.push_back({RelationKind::Binomial, 0, std::move(terms)});
    }
    for (const auto& rel : doc.at("trinomials")) {
        auto terms = read_terms(rel);
        if (terms.empty())
            throw std::invalid_argument("parse_ideal_json: empty trinomial");
        // lambda values are pairwise distinct, so the leading coefficient names i
        const auto lead = F.reduce(terms.front().coeff);
        int index = 0;
        for (std::size_t i = 0; i < out.lambda.size(); ++i)
            if (out.lambda[i] == lead)
                index = static_cast<int>(i) + 1;
        if (index == 0)
            throw std::invalid_argument("parse_ideal_json: trinomial coefficient matches no lambda");
        out.trinomials.push_back({RelationKind::Trinomial, index, std::move(terms)});
    }
    return out;
}

} // namespace gfc
