#include "hopfind/interchange.hpp"

#include <fstream>

namespace hopfind {

using nlohmann::json;

namespace {

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw validation_error("expected integer or decimal string in interchange file");
}

class TableBackend : public HopfBackend {
public:
    TableBackend(std::vector<std::vector<SparseVec>> mult, std::vector<CoSparse> comult)
        : mult_(std::move(mult)), comult_(std::move(comult)) {}
    SparseVec product(long i, long j) const override { return mult_[i][j]; }
    CoSparse comult(long i) const override { return comult_[i]; }

private:
    std::vector<std::vector<SparseVec>> mult_;
    std::vector<CoSparse> comult_;
};

} // namespace

json cyc_to_json(const Cyc& c) {
    json arr = json::array();
    for (const Rat& q : c.coeffs())
        arr.push_back(json::array({int_to_json(q.get_num()), int_to_json(q.get_den())}));
    return arr;
}

Cyc cyc_from_json(const CycField& f, const json& j) {
    if (!j.is_array() || static_cast<long>(j.size()) != f.degree())
        throw validation_error("scalar coefficient array has wrong length");
    std::vector<Rat> coeffs(f.degree());
    for (long k = 0; k < f.degree(); ++k) {
        Rat q(int_from_json(j[k][0]), int_from_json(j[k][1]));
        q.canonicalize();
        coeffs[k] = q;
    }
    return Cyc::from_coeffs(f, std::move(coeffs));
}

json algebra_to_json(const HopfAlgebra& h) {
    const long d = h.dim();
    json j;
    j["format"] = kAlgebraFormat;
    j["version"] = kFormatVersion;
    j["cyclotomic_order"] = h.field().order();
    j["dim"] = d;
    j["name"] = h.name();

    json unit = json::array(), counit = json::array();
    for (long i = 0; i < d; ++i) {
        unit.push_back(cyc_to_json(sv_get(h.unit(), i, h.field())));
        counit.push_back(cyc_to_json(h.counit_at(i)));
    }
    j["unit"] = std::move(unit);
    j["counit"] = std::move(counit);

    json mult = json::array();
    for (long i = 0; i < d; ++i)
        for (long k = 0; k < d; ++k)
            for (const auto& [t, v] : h.product(i, k))
                mult.push_back(json::array({i, k, t, cyc_to_json(v)}));
    j["mult"] = std::move(mult);

    json comult = json::array();
    for (long i = 0; i < d; ++i)
        for (const auto& [a, b, v] : h.comult(i))
            comult.push_back(json::array({i, a, b, cyc_to_json(v)}));
    j["comult"] = std::move(comult);

    json antipode = json::array();
    for (const auto& [r, c, v] : h.antipode().triplets())
        antipode.push_back(json::array({r, c, cyc_to_json(v)}));
    j["antipode"] = std::move(antipode);

    j["generators"] = h.generators();
    return j;
}

HopfAlgebra algebra_from_json(const json& j) {
    if (!j.contains("format") || j["format"] != kAlgebraFormat)
        throw validation_error("not a hopfind algebra file");
    if (j["version"].get<int>() != kFormatVersion)
        throw validation_error("unsupported interchange format version");
    const long N = j["cyclotomic_order"].get<long>();
    const long d = j["dim"].get<long>();
    const CycField& f = CycField::get(N);

    SparseVec unit, counit;
    for (long i = 0; i < d; ++i) {
        Cyc u = cyc_from_json(f, j["unit"][i]);
        if (!u.is_zero()) unit.emplace_back(i, u);
        Cyc e = cyc_from_json(f, j["counit"][i]);
        if (!e.is_zero()) counit.emplace_back(i, e);
    }

    std::vector<std::vector<SparseVec>> mult(d, std::vector<SparseVec>(d));
    for (const auto& entry : j["mult"]) {
        long i = entry[0].get<long>(), k = entry[1].get<long>(), t = entry[2].get<long>();
        mult[i][k].emplace_back(t, cyc_from_json(f, entry[3]));
    }
    for (auto& row : mult)
        for (auto& v : row) v = sv_normalize(std::move(v));

    std::vector<CoSparse> comult(d);
    for (const auto& entry : j["comult"]) {
        long i = entry[0].get<long>(), a = entry[1].get<long>(), b = entry[2].get<long>();
        comult[i].emplace_back(a, b, cyc_from_json(f, entry[3]));
    }

    std::vector<std::tuple<long, long, Cyc>> sts;
    for (const auto& entry : j["antipode"]) {
        long r = entry[0].get<long>(), c = entry[1].get<long>();
        sts.emplace_back(r, c, cyc_from_json(f, entry[2]));
    }
    Mat s = Mat::from_triplets(f, d, d, sts);

    std::vector<long> gens;
    if (j.contains("generators"))
        for (const auto& g : j["generators"]) gens.push_back(g.get<long>());

    std::string name = j.contains("name") ? j["name"].get<std::string>() : "loaded";
    return HopfAlgebra(f, d, std::make_shared<TableBackend>(std::move(mult), std::move(comult)),
                       std::move(unit), std::move(counit), std::move(s), std::move(gens), name);
}

void save_algebra(const std::string& path, const HopfAlgebra& h) {
    std::ofstream out(path);
    if (!out) throw validation_error("cannot open " + path + " for writing");
    out << algebra_to_json(h).dump(1) << "\n";
}

HopfAlgebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open " + path);
    json j;
    in >> j;
    return algebra_from_json(j);
}

json module_to_json(const HModule& v) {
    json j;
    j["format"] = kModuleFormat;
    j["version"] = kFormatVersion;
    j["cyclotomic_order"] = v.parent().field().order();
    j["algebra_dim"] = v.parent().dim();
    j["dim"] = v.dim();
    json actions = json::array();
    for (long i = 0; i < v.parent().dim(); ++i)
        for (const auto& [r, c, val] : v.action(i).triplets())
            actions.push_back(json::array({i, r, c, cyc_to_json(val)}));
    j["actions"] = std::move(actions);
    return j;
}

HModule module_from_json(const HopfAlgebra& parent, const json& j) {
    if (!j.contains("format") || j["format"] != kModuleFormat)
        throw validation_error("not a hopfind module file");
    if (j["cyclotomic_order"].get<long>() != parent.field().order())
        throw field_mismatch_error("module file cyclotomic order differs from the algebra");
    if (j["algebra_dim"].get<long>() != parent.dim())
        throw validation_error("module file algebra dimension differs from the algebra");
    const long dv = j["dim"].get<long>();
    std::vector<std::vector<std::tuple<long, long, Cyc>>> ts(parent.dim());
    for (const auto& entry : j["actions"]) {
        long i = entry[0].get<long>(), r = entry[1].get<long>(), c = entry[2].get<long>();
        ts[i].emplace_back(r, c, cyc_from_json(parent.field(), entry[3]));
    }
    std::vector<Mat> actions;
    actions.reserve(parent.dim());
    for (long i = 0; i < parent.dim(); ++i)
        actions.push_back(Mat::from_triplets(parent.field(), dv, dv, ts[i]));
    return module_from_actions(parent, std::move(actions));
}

HModule load_module(const HopfAlgebra& parent, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open " + path);
    json j;
    in >> j;
    return module_from_json(parent, j);
}

GroupPresentation group_from_json(const json& j) {
    GroupPresentation g;
    g.order = j["order"].get<long>();
    g.cayley.assign(g.order, std::vector<long>(g.order));
    for (long i = 0; i < g.order; ++i)
        for (long k = 0; k < g.order; ++k) g.cayley[i][k] = j["cayley"][i][k].get<long>();
    if (j.contains("name")) g.name = j["name"].get<std::string>();
    // locate identity and inverses from the table
    g.identity = -1;
    for (long e = 0; e < g.order && g.identity < 0; ++e) {
        bool ok = true;
        for (long i = 0; i < g.order; ++i)
            if (g.cayley[e][i] != i || g.cayley[i][e] != i) { ok = false; break; }
        if (ok) g.identity = e;
    }
    if (g.identity < 0) throw validation_error("Cayley table has no identity element");
    g.inverse.assign(g.order, -1);
    for (long i = 0; i < g.order; ++i)
        for (long k = 0; k < g.order; ++k)
            if (g.cayley[i][k] == g.identity && g.cayley[k][i] == g.identity) g.inverse[i] = k;
    for (long i = 0; i < g.order; ++i)
        if (g.inverse[i] < 0) throw validation_error("Cayley table has no inverse for element " + std::to_string(i));
    g.validate();
    return g;
}

GroupPresentation load_group(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open " + path);
    json j;
    in >> j;
    return group_from_json(j);
}

} // namespace hopfind
