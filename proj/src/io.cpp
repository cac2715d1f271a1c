#include "gptk/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gptk {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
        rows.push_back(row);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Matrix matrix_from_json(const json& j, FieldPrime f) {
    std::size_t rows = j.at("rows"), cols = j.at("cols");
    Matrix m(f, rows, cols);
    const auto& e = j.at("entries");
    if (e.size() != rows) throw std::invalid_argument("matrix: bad row count");
    for (std::size_t r = 0; r < rows; ++r) {
        if (e[r].size() != cols)
            throw std::invalid_argument("matrix: bad column count");
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, e[r][c].get<uint32_t>());
    }
    return m;
}

json parse_document(const std::string& path, const std::string& kind) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw std::invalid_argument(path + ": parse error: " + e.what());
    }
    if (j.value("kind", "") != kind)
        throw std::invalid_argument(path + ": expected kind '" + kind + "'");
    return j;
}

std::string resolve_ref(const std::string& base_path, const json& ref) {
    fs::path dir = fs::path(base_path).parent_path();
    std::string target = (dir / ref.at("path").get<std::string>()).string();
    if (ref.contains("digest")) {
        std::string want = ref.at("digest");
        std::string got = fnv1a_digest(read_file(target));
        if (want != got)
            throw std::invalid_argument(base_path + ": digest mismatch for " +
                                        target + " (expected " + want +
                                        ", found " + got + ")");
    }
    return target;
}

json make_ref(const std::string& from_path, const std::string& to_path) {
    fs::path rel =
        fs::relative(fs::path(to_path), fs::path(from_path).parent_path());
    return json{{"path", rel.string()},
                {"digest", fnv1a_digest(read_file(to_path))}};
}

json algebra_structure_json(const Algebra& a) {
    json lm = json::array();
    for (const auto& m : a.left_mult) lm.push_back(matrix_to_json(m));
    return json{{"dim", a.dim},
                {"left_mult", lm},
                {"unit", a.unit},
                {"radical", matrix_to_json(a.radical)}};
}

AlgebraPtr algebra_from_structure(const json& body, uint32_t p) {
    FieldPrime f(p);
    std::size_t dim = body.at("dim");
    std::vector<Matrix> lm;
    for (const auto& m : body.at("left_mult")) lm.push_back(matrix_from_json(m, f));
    std::vector<uint32_t> unit = body.at("unit").get<std::vector<uint32_t>>();
    Matrix rad = matrix_from_json(body.at("radical"), f);
    if (lm.size() != dim || unit.size() != dim)
        throw std::invalid_argument("algebra: dim mismatch");
    auto a = make_algebra(f, lm, unit, rad);
    auto rep = validate_algebra(*a);
    if (!rep.ok) throw std::invalid_argument("algebra invalid: " + rep.message);
    return a;
}

json bimodule_body(const Bimodule& m) {
    json la = json::array(), ra = json::array();
    for (const auto& a : m.left_actions) la.push_back(matrix_to_json(a));
    for (const auto& a : m.right_actions) ra.push_back(matrix_to_json(a));
    return json{{"dim", m.dim}, {"left_actions", la}, {"right_actions", ra}};
}

Bimodule bimodule_from_body(const json& body, const AlgebraPtr& left,
                            const AlgebraPtr& right) {
    Bimodule m;
    m.left_algebra = left;
    m.right_algebra = right;
    m.dim = body.at("dim");
    for (const auto& a : body.at("left_actions"))
        m.left_actions.push_back(matrix_from_json(a, left->field));
    for (const auto& a : body.at("right_actions"))
        m.right_actions.push_back(matrix_from_json(a, right->field));
    auto rep = validate_bimodule(m);
    if (!rep.ok) throw std::invalid_argument("bimodule invalid: " + rep.message);
    return m;
}

} // namespace

std::string fnv1a_digest(const std::string& content) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : content) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void atomic_write(const std::string& path, const std::string& content) {
    fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
    }
    fs::rename(tmp, target);
}

AlgebraPtr load_algebra(const std::string& path) {
    json j = parse_document(path, "algebra");
    uint32_t p = j.at("p");
    if (j.contains("truncated"))
        return truncated_polynomial(p, j.at("truncated").at("t").get<std::size_t>());
    if (j.contains("quiver")) {
        const auto& q = j.at("quiver");
        QuiverPresentation pres;
        pres.vertices = q.at("vertices");
        for (const auto& a : q.at("arrows"))
            pres.arrows.emplace_back(a[0].get<std::size_t>(),
                                     a[1].get<std::size_t>());
        pres.truncation = q.at("truncation");
        if (q.contains("relations"))
            for (const auto& rel : q.at("relations")) {
                std::vector<RelationTerm> terms;
                for (const auto& t : rel)
                    terms.push_back(RelationTerm{
                        t.at("coeff").get<uint32_t>(),
                        t.at("arrows").get<std::vector<std::size_t>>()});
                pres.relations.push_back(terms);
            }
        return quotient_path_algebra(pres, p);
    }
    if (j.contains("structure"))
        return algebra_from_structure(j.at("structure"), p);
    throw std::invalid_argument(path + ": no algebra body");
}

void save_algebra(const std::string& path, const AlgebraPtr& a) {
    json j{{"kind", "algebra"},
           {"p", a->field.p},
           {"structure", algebra_structure_json(*a)}};
    atomic_write(path, j.dump(2) + "\n");
}

Module load_module(const std::string& path) {
    json j = parse_document(path, "module");
    AlgebraPtr a = load_algebra(resolve_ref(path, j.at("algebra")));
    Module m{a, j.at("dim").get<std::size_t>(), {}};
    for (const auto& act : j.at("actions"))
        m.actions.push_back(matrix_from_json(act, a->field));
    auto rep = validate_module(m);
    if (!rep.ok)
        throw std::invalid_argument(path + ": module invalid: " + rep.message);
    return m;
}

void save_module(const std::string& path, const Module& m,
                 const std::string& algebra_path) {
    json acts = json::array();
    for (const auto& a : m.actions) acts.push_back(matrix_to_json(a));
    json j{{"kind", "module"},
           {"algebra", make_ref(path, algebra_path)},
           {"dim", m.dim},
           {"actions", acts}};
    atomic_write(path, j.dump(2) + "\n");
}

Bimodule load_bimodule(const std::string& path) {
    json j = parse_document(path, "bimodule");
    AlgebraPtr left = load_algebra(resolve_ref(path, j.at("left_algebra")));
    AlgebraPtr right = load_algebra(resolve_ref(path, j.at("right_algebra")));
    return bimodule_from_body(j, left, right);
}

void save_bimodule(const std::string& path, const Bimodule& m,
                   const std::string& left_algebra_path,
                   const std::string& right_algebra_path) {
    json j = bimodule_body(m);
    j["kind"] = "bimodule";
    j["left_algebra"] = make_ref(path, left_algebra_path);
    j["right_algebra"] = make_ref(path, right_algebra_path);
    atomic_write(path, j.dump(2) + "\n");
}

TriangularPtr load_triangular(const std::string& path) {
    json j = parse_document(path, "triangular");
    if (j.contains("t2_of"))
        return t2_extension(load_algebra(resolve_ref(path, j.at("t2_of"))));
    AlgebraPtr r = load_algebra(resolve_ref(path, j.at("r")));
    AlgebraPtr s = load_algebra(resolve_ref(path, j.at("s")));
    Bimodule m = load_bimodule(resolve_ref(path, j.at("bimodule")));
    return build_triangular(r, s, m);
}

TripleModule load_triple(const std::string& path) {
    json j = parse_document(path, "triple");
    TriangularPtr g = load_triangular(resolve_ref(path, j.at("triangular")));
    Module x = load_module(resolve_ref(path, j.at("x")));
    Module y = load_module(resolve_ref(path, j.at("y")));
    // rebind to the loaded triangular sides (structural equality is enough)
    if (!same_algebra(x.algebra, g->r) || !same_algebra(y.algebra, g->s))
        throw std::invalid_argument(path + ": component algebras do not match");
    x.algebra = g->r;
    y.algebra = g->s;
    Matrix phi = matrix_from_json(j.at("phi"), g->r->field);
    return make_triple(g, x, y, phi);
}

void save_triple(const std::string& path, const TripleModule& t,
                 const std::string& triangular_path, const std::string& x_path,
                 const std::string& y_path) {
    json j{{"kind", "triple"},
           {"triangular", make_ref(path, triangular_path)},
           {"x", make_ref(path, x_path)},
           {"y", make_ref(path, y_path)},
           {"phi", matrix_to_json(t.phi)}};
    atomic_write(path, j.dump(2) + "\n");
}

void save_census(const std::string& path, const GPCensus& census,
                 uint64_t seed) {
    const auto& g = census.gamma;
    json reps = json::array();
    for (const auto& e : census.reps) {
        json xa = json::array(), ya = json::array();
        for (const auto& a : e.triple.x.actions) xa.push_back(matrix_to_json(a));
        for (const auto& a : e.triple.y.actions) ya.push_back(matrix_to_json(a));
        const char* tag = "ProvenGP";
        if (e.verdict.verdict.tag == GPTag::GPUpToBound) tag = "GPUpToBound";
        if (e.verdict.verdict.tag == GPTag::NotGP) tag = "NotGP";
        reps.push_back(json{{"dim_x", e.triple.x.dim},
                            {"dim_y", e.triple.y.dim},
                            {"x_actions", xa},
                            {"y_actions", ya},
                            {"phi", matrix_to_json(e.triple.phi)},
                            {"certificate", tag}});
    }
    json j{{"kind", "census"},
           {"p", g->r->field.p},
           {"bound", census.bound},
           {"seed", seed},
           {"complete", census.complete},
           {"strategy", census.strategy},
           {"count", census.reps.size()},
           {"r", algebra_structure_json(*g->r)},
           {"s", algebra_structure_json(*g->s)},
           {"bimodule", bimodule_body(g->m)},
           {"reps", reps}};
    atomic_write(path, j.dump(2) + "\n");
}

GPCensus load_census(const std::string& path) {
    json j = parse_document(path, "census");
    uint32_t p = j.at("p");
    AlgebraPtr r = algebra_from_structure(j.at("r"), p);
    AlgebraPtr s = algebra_from_structure(j.at("s"), p);
    Bimodule m = bimodule_from_body(j.at("bimodule"), s, r);
    TriangularPtr g = build_triangular(r, s, m);

    GPCensus census;
    census.gamma = g;
    census.bound = j.at("bound");
    census.complete = j.at("complete");
    census.strategy = j.at("strategy");
    for (const auto& e : j.at("reps")) {
        Module x{g->r, e.at("dim_x").get<std::size_t>(), {}};
        for (const auto& a : e.at("x_actions"))
            x.actions.push_back(matrix_from_json(a, r->field));
        Module y{g->s, e.at("dim_y").get<std::size_t>(), {}};
        for (const auto& a : e.at("y_actions"))
            y.actions.push_back(matrix_from_json(a, s->field));
        TripleModule t =
            make_triple(g, x, y, matrix_from_json(e.at("phi"), r->field));
        GPCensusEntry entry;
        entry.triple = t;
        entry.flat = triple_to_module(t);
        std::string tag = e.value("certificate", "ProvenGP");
        if (tag == "GPUpToBound") entry.verdict.verdict.tag = GPTag::GPUpToBound;
        else if (tag == "NotGP") entry.verdict.verdict.tag = GPTag::NotGP;
        else entry.verdict.verdict.tag = GPTag::ProvenGP;
        census.reps.push_back(entry);
    }
    return census;
}

std::string census_table(const GPCensus& census) {
    std::ostringstream out;
    for (std::size_t i = 0; i < census.reps.size(); ++i) {
        const auto& e = census.reps[i];
        const char* tag = "ProvenGP";
        if (e.verdict.verdict.tag == GPTag::GPUpToBound) tag = "GPUpToBound";
        if (e.verdict.verdict.tag == GPTag::NotGP) tag = "NotGP";
        out << "rep=" << i << " dim_x=" << e.triple.x.dim
            << " dim_y=" << e.triple.y.dim << " dim=" << e.flat.dim
            << " certificate=" << tag << "\n";
    }
    out << "count=" << census.reps.size() << " bound=" << census.bound
        << " complete=" << (census.complete ? "yes" : "no")
        << " strategy=" << census.strategy << "\n";
    return out.str();
}

} // namespace gptk
