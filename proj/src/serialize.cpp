#include "hofa/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hofa {

Json to_json(const Rat& x) { return x.str(); }

Rat rat_from_json(const Json& j) { return Rat::parse(j.get<std::string>()); }

Json to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(to_json(c));
    return arr;
}

Poly poly_from_json(const Json& j) {
    std::vector<Rat> c;
    for (const auto& e : j) c.push_back(rat_from_json(e));
    return Poly(std::move(c));
}

namespace {

const char* kind_name(BracketTerm::Kind k) {
    switch (k) {
        case BracketTerm::Kind::Poly: return "poly";
        case BracketTerm::Kind::NBracket: return "nbracket";
        case BracketTerm::Kind::FracProd: return "fracprod";
        case BracketTerm::Kind::FracLin: return "fraclin";
        case BracketTerm::Kind::Deg3NFF: return "deg3nff";
        case BracketTerm::Kind::Deg3N2F: return "deg3n2f";
    }
    throw std::logic_error("unreachable");
}

BracketTerm::Kind kind_of(const std::string& s) {
    if (s == "poly") return BracketTerm::Kind::Poly;
    if (s == "nbracket") return BracketTerm::Kind::NBracket;
    if (s == "fracprod") return BracketTerm::Kind::FracProd;
    if (s == "fraclin") return BracketTerm::Kind::FracLin;
    if (s == "deg3nff") return BracketTerm::Kind::Deg3NFF;
    if (s == "deg3n2f") return BracketTerm::Kind::Deg3N2F;
    throw std::invalid_argument("unknown bracket term kind: " + s);
}

Json rat_vec_json(const RatVec& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(to_json(x));
    return arr;
}

RatVec rat_vec_from(const Json& j) {
    RatVec v;
    for (const auto& e : j) v.push_back(rat_from_json(e));
    return v;
}

Json int_vec_json(const IntVec& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(x.get_str());
    return arr;
}

IntVec int_vec_from(const Json& j) {
    IntVec v;
    for (const auto& e : j) v.push_back(BigInt(e.get<std::string>()));
    return v;
}

}  // namespace

Json to_json(const BracketTerm& t) {
    Json j;
    j["kind"] = kind_name(t.kind);
    if (t.kind == BracketTerm::Kind::Poly) {
        j["coeffs"] = to_json(t.poly);
        return j;
    }
    j["a"] = to_json(t.a);
    switch (t.kind) {
        case BracketTerm::Kind::NBracket:
            j["alpha"] = to_json(t.alpha);
            j["beta"] = to_json(t.beta);
            break;
        case BracketTerm::Kind::FracProd:
            j["alpha"] = to_json(t.alpha);
            j["beta"] = to_json(t.beta);
            j["off1"] = to_json(t.off1);
            j["off2"] = to_json(t.off2);
            break;
        case BracketTerm::Kind::FracLin:
            j["alpha"] = to_json(t.alpha);
            j["off1"] = to_json(t.off1);
            break;
        case BracketTerm::Kind::Deg3NFF:
            j["beta"] = to_json(t.beta);
            j["gamma"] = to_json(t.gamma);
            break;
        case BracketTerm::Kind::Deg3N2F:
            j["beta"] = to_json(t.beta);
            break;
        default:
            break;
    }
    return j;
}

BracketTerm bracket_term_from_json(const Json& j) {
    auto kind = kind_of(j.at("kind").get<std::string>());
    switch (kind) {
        case BracketTerm::Kind::Poly:
            return BracketTerm::poly_term(poly_from_json(j.at("coeffs")));
        case BracketTerm::Kind::NBracket:
            return BracketTerm::nbracket(rat_from_json(j.at("a")),
                                         rat_from_json(j.at("alpha")),
                                         rat_from_json(j.at("beta")));
        case BracketTerm::Kind::FracProd:
            return BracketTerm::frac_prod(
                rat_from_json(j.at("a")), rat_from_json(j.at("alpha")),
                rat_from_json(j.at("beta")), rat_from_json(j.at("off1")),
                rat_from_json(j.at("off2")));
        case BracketTerm::Kind::FracLin:
            return BracketTerm::frac_lin(rat_from_json(j.at("a")),
                                         rat_from_json(j.at("alpha")),
                                         rat_from_json(j.at("off1")));
        case BracketTerm::Kind::Deg3NFF:
            return BracketTerm::deg3_nff(rat_from_json(j.at("a")),
                                         rat_from_json(j.at("beta")),
                                         rat_from_json(j.at("gamma")));
        case BracketTerm::Kind::Deg3N2F:
            return BracketTerm::deg3_n2f(rat_from_json(j.at("a")),
                                         rat_from_json(j.at("beta")));
    }
    throw std::logic_error("unreachable");
}

Json to_json(const BracketExpr& e) {
    Json j;
    if (e.modulus_n())
        j["modulus_n"] = e.modulus_n()->get_str();
    else
        j["modulus_n"] = nullptr;
    Json terms = Json::array();
    for (const auto& t : e.terms()) terms.push_back(to_json(t));
    j["terms"] = terms;
    return j;
}

BracketExpr bracket_expr_from_json(const Json& j) {
    std::vector<BracketTerm> terms;
    for (const auto& t : j.at("terms")) terms.push_back(bracket_term_from_json(t));
    std::optional<BigInt> mod;
    if (!j.at("modulus_n").is_null())
        mod = BigInt(j.at("modulus_n").get<std::string>());
    return BracketExpr(std::move(terms), mod);
}

Json to_json(const ElemNilmanifold& m) {
    Json j;
    j["d"] = m.d;
    j["frequency"] = m.frequency.get_str();
    Json c = Json::array();
    for (const auto& row : m.structure_constants) c.push_back(int_vec_json(row));
    j["structure_constants"] = c;
    return j;
}

ElemNilmanifold nilmanifold_from_json(const Json& j) {
    ElemNilmanifold m;
    m.d = j.at("d").get<int>();
    m.frequency = BigInt(j.at("frequency").get<std::string>());
    for (const auto& row : j.at("structure_constants"))
        m.structure_constants.push_back(int_vec_from(row));
    return m;
}

Json to_json(const PolySeq& g) {
    Json j;
    j["alpha"] = rat_vec_json(g.alpha);
    j["beta"] = rat_vec_json(g.beta);
    j["vertical"] = to_json(g.vertical);
    return j;
}

PolySeq polyseq_from_json(const Json& j) {
    PolySeq g;
    g.alpha = rat_vec_from(j.at("alpha"));
    g.beta = rat_vec_from(j.at("beta"));
    g.vertical = poly_from_json(j.at("vertical"));
    return g;
}

Json to_json(const RBPLInstance& inst) {
    Json j;
    j["N"] = inst.N.get_str();
    j["d"] = inst.d;
    j["a"] = rat_vec_json(inst.a);
    j["alpha"] = rat_vec_json(inst.alpha);
    j["beta"] = to_json(inst.beta);
    j["K"] = to_json(inst.K);
    j["H"] = inst.H;
    return j;
}

RBPLInstance rbpl_instance_from_json(const Json& j) {
    RBPLInstance inst;
    inst.N = BigInt(j.at("N").get<std::string>());
    inst.d = j.at("d").get<int>();
    inst.a = rat_vec_from(j.at("a"));
    inst.alpha = rat_vec_from(j.at("alpha"));
    inst.beta = rat_from_json(j.at("beta"));
    inst.K = rat_from_json(j.at("K"));
    inst.H = j.at("H").get<std::vector<long>>();
    return inst;
}

Json to_json(const Certificate& c) {
    Json j;
    j["d"] = c.d;
    Json w = Json::array(), e = Json::array();
    for (const auto& v : c.w) w.push_back(int_vec_json(v));
    for (const auto& v : c.eta) e.push_back(int_vec_json(v));
    j["w"] = w;
    j["eta"] = e;
    return j;
}

Certificate certificate_from_json(const Json& j) {
    Certificate c;
    c.d = j.at("d").get<int>();
    for (const auto& v : j.at("w")) c.w.push_back(int_vec_from(v));
    for (const auto& v : j.at("eta")) c.eta.push_back(int_vec_from(v));
    return c;
}

Json to_json(const FnZN& f) {
    Json j;
    j["n"] = f.n;
    Json vals = Json::array();
    for (const auto& v : f.values) {
        Json pair = Json::array();
        pair.push_back(format_double(v.real()));
        pair.push_back(format_double(v.imag()));
        vals.push_back(pair);
    }
    j["values"] = vals;
    return j;
}

FnZN fnzn_from_json(const Json& j) {
    FnZN f;
    f.n = j.at("n").get<long>();
    for (const auto& pair : j.at("values")) {
        double re = std::stod(pair[0].get<std::string>());
        double im = std::stod(pair[1].get<std::string>());
        f.values.emplace_back(re, im);
    }
    if (static_cast<long>(f.values.size()) != f.n)
        throw std::invalid_argument("FnZN: value count does not match n");
    return f;
}

Json to_json(const DichotomyResult& r) {
    Json j;
    j["branch"] =
        r.branch == DichotomyResult::Branch::Certificate ? "certificate" : "small_n";
    j["r"] = r.r;
    Json w = Json::array(), e = Json::array();
    for (const auto& v : r.w) w.push_back(int_vec_json(v));
    for (const auto& v : r.eta) e.push_back(int_vec_json(v));
    j["w"] = w;
    j["eta"] = e;
    j["mean"] = format_double(r.diagnostics.mean);
    j["vdc_threshold"] = format_double(r.diagnostics.vdc_threshold);
    j["good_h_density"] = format_double(r.diagnostics.good_h_density);
    j["class_density"] = format_double(r.diagnostics.class_density);
    return j;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string emit_csv(const Table& t) {
    std::ostringstream os;
    for (size_t i = 0; i < t.header.size(); ++i)
        os << t.header[i] << (i + 1 < t.header.size() ? "," : "");
    os << "\n";
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i)
            os << row[i] << (i + 1 < row.size() ? "," : "");
        os << "\n";
    }
    return os.str();
}

std::string emit_json(const Table& t) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json obj;
        for (size_t i = 0; i < t.header.size() && i < row.size(); ++i)
            obj[t.header[i]] = row[i];
        rows.push_back(obj);
    }
    return rows.dump(2) + "\n";
}

void write_table(const Table& t, const std::string& path, const std::string& format) {
    if (format == "csv")
        write_text(path, emit_csv(t));
    else if (format == "json")
        write_text(path, emit_json(t));
    else
        throw std::invalid_argument("unknown output format: " + format);
}

void write_text(const std::string& path, const std::string& content) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Table expansion_table(const FourierExpansion& e) {
    Table t;
    t.header = {"coef_re", "coef_im", "freq_n", "freq_h"};
    for (const auto& term : e.terms)
        t.rows.push_back({format_double(term.coef.real()), format_double(term.coef.imag()),
                          term.freq_n.str(), term.freq_h.str()});
    return t;
}

}  // namespace hofa
