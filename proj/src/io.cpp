#include "lieaff/io.hpp"

#include "lieaff/error.hpp"

#include <fstream>
#include <sstream>

namespace lieaff::io {

namespace {

const json& field(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw Error(path + ": expected an object");
    const auto it = j.find(key);
    if (it == j.end()) throw Error(path + ": missing field '" + key + "'");
    return *it;
}

std::size_t asCount(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw Error(path + ": expected a non-negative integer");
    return j.get<std::size_t>();
}

/// 1-based index in [1, n] -> 0-based.
std::size_t asIndex(const json& j, std::size_t n, const std::string& path) {
    if (!j.is_number_integer()) throw Error(path + ": expected an integer index");
    const long long v = j.get<long long>();
    if (v < 1 || static_cast<std::size_t>(v) > n)
        throw Error(path + ": index " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    return static_cast<std::size_t>(v - 1);
}

Rational asRational(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw Error(path + ": expected a rational string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

const json& asArray(const json& j, const std::string& path) {
    if (!j.is_array()) throw Error(path + ": expected an array");
    return j;
}

Vector asVector(const json& j, std::size_t n, const std::string& path) {
    asArray(j, path);
    if (j.size() != n) throw Error(path + ": expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = asRational(j[i], path + "[" + std::to_string(i) + "]");
    return v;
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

} // namespace

// ---------------------------------------------------------------------------

LieAlgebra algebraFromJson(const json& j) {
    const std::size_t n = asCount(field(j, "dim", "algebra"), "algebra.dim");
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw Error("algebra.name: expected a string");
        name = j["name"].get<std::string>();
    }
    std::vector<std::string> basis = LieAlgebra::defaultNames(n);
    if (j.contains("basis")) {
        const json& b = asArray(j["basis"], "algebra.basis");
        if (b.size() != n) throw Error("algebra.basis: expected " + std::to_string(n) + " names");
        for (std::size_t i = 0; i < n; ++i) {
            if (!b[i].is_string()) throw Error(at("algebra.basis", i) + ": expected a string");
            basis[i] = b[i].get<std::string>();
        }
    }
    std::vector<BracketSpec> brackets;
    if (j.contains("brackets")) {
        const json& list = asArray(j["brackets"], "algebra.brackets");
        for (std::size_t e = 0; e < list.size(); ++e) {
            const std::string path = at("algebra.brackets", e);
            BracketSpec spec;
            spec.i = asIndex(field(list[e], "i", path), n, path + ".i");
            spec.j = asIndex(field(list[e], "j", path), n, path + ".j");
            if (spec.i >= spec.j)
                throw Error(path + ": bracket requires i < j, got i=" + std::to_string(spec.i + 1) +
                            ", j=" + std::to_string(spec.j + 1));
            const json& terms = asArray(field(list[e], "terms", path), path + ".terms");
            for (std::size_t t = 0; t < terms.size(); ++t) {
                const std::string tp = at(path + ".terms", t);
                spec.terms.push_back({asIndex(field(terms[t], "k", tp), n, tp + ".k"), asRational(field(terms[t], "c", tp), tp + ".c")});
            }
            for (const auto& prev : brackets)
                if (prev.i == spec.i && prev.j == spec.j) throw Error(path + ": pair given twice");
            brackets.push_back(std::move(spec));
        }
    }
    return LieAlgebra(std::move(name), std::move(basis), brackets);
}

json algebraToJson(const LieAlgebra& L) {
    json brackets = json::array();
    for (const auto& [ij, terms] : L.constants()) {
        json ts = json::array();
        for (const auto& t : terms) ts.push_back({{"k", t.k + 1}, {"c", t.c.str()}});
        brackets.push_back({{"i", ij.first + 1}, {"j", ij.second + 1}, {"terms", ts}});
    }
    return {{"name", L.name()}, {"dim", L.dim()}, {"basis", L.basisNames()}, {"brackets", brackets}};
}

KForm formFromJson(const json& j) {
    const std::size_t k = asCount(field(j, "degree", "form"), "form.degree");
    const std::size_t n = asCount(field(j, "dim", "form"), "form.dim");
    if (k > n) throw Error("form.degree: exceeds form.dim");
    KForm f(k, n);
    const json& coeffs = asArray(field(j, "coeffs", "form"), "form.coeffs");
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        const std::string path = at("form.coeffs", e);
        const json& idx = asArray(field(coeffs[e], "idx", path), path + ".idx");
        if (idx.size() != k) throw Error(path + ".idx: expected " + std::to_string(k) + " indices");
        IndexTuple t;
        for (std::size_t a = 0; a < idx.size(); ++a) {
            t.push_back(asIndex(idx[a], n, at(path + ".idx", a)));
            if (a > 0 && t[a - 1] >= t[a]) throw Error(path + ".idx: indices must be strictly increasing");
        }
        if (!f.onBasis(t).isZero()) throw Error(path + ".idx: tuple given twice");
        f.set(t, asRational(field(coeffs[e], "c", path), path + ".c"));
    }
    return f;
}

json formToJson(const KForm& f) {
    json coeffs = json::array();
    for (const auto& [idx, c] : f.coeffs()) coeffs.push_back({{"idx", tupleToJson(idx)}, {"c", c.str()}});
    return {{"degree", f.degree()}, {"dim", f.dim()}, {"coeffs", coeffs}};
}

LiftData liftDataFromJson(const json& j) {
    const json& phi = asArray(field(j, "phi", "lift"), "lift.phi");
    const std::size_t n = phi.size();
    LiftData d = LiftData::zero(n);
    for (std::size_t r = 0; r < n; ++r) {
        const Vector row = asVector(phi[r], n, at("lift.phi", r));
        for (std::size_t c = 0; c < n; ++c) d.phi(r, c) = row[c];
    }
    const json& V = asArray(field(j, "V", "lift"), "lift.V");
    if (V.size() != n) throw Error("lift.V: expected " + std::to_string(n) + " columns");
    for (std::size_t i = 0; i < n; ++i) d.V[i] = asVector(V[i], n, at("lift.V", i));
    d.a = asVector(field(j, "a", "lift"), n, "lift.a");
    d.W0 = asVector(field(j, "W0", "lift"), n, "lift.W0");
    d.rho = asRational(field(j, "rho", "lift"), "lift.rho");
    return d;
}

json liftDataToJson(const LiftData& d) {
    json phi = json::array();
    for (std::size_t r = 0; r < d.dim(); ++r) {
        const auto row = d.phi.row(r);
        phi.push_back(vectorToJson(row));
    }
    json V = json::array();
    for (const auto& v : d.V) V.push_back(vectorToJson(v));
    return {{"phi", phi}, {"V", V}, {"a", vectorToJson(d.a)}, {"W0", vectorToJson(d.W0)}, {"rho", d.rho.str()}};
}

json productToJson(const BilinearProduct& p) {
    json table = json::array();
    for (std::size_t i = 0; i < p.dim(); ++i)
        for (std::size_t j = 0; j < p.dim(); ++j)
            if (!isZero(p.at(i, j))) table.push_back({{"i", i + 1}, {"j", j + 1}, {"value", vectorToJson(p.at(i, j))}});
    return {{"dim", p.dim()}, {"table", table}};
}

BilinearProduct productFromJson(const json& j) {
    const std::size_t n = asCount(field(j, "dim", "product"), "product.dim");
    BilinearProduct p(n);
    const json& table = asArray(field(j, "table", "product"), "product.table");
    for (std::size_t e = 0; e < table.size(); ++e) {
        const std::string path = at("product.table", e);
        const std::size_t i = asIndex(field(table[e], "i", path), n, path + ".i");
        const std::size_t k = asIndex(field(table[e], "j", path), n, path + ".j");
        p.at(i, k) = asVector(field(table[e], "value", path), n, path + ".value");
    }
    return p;
}

json vectorToJson(std::span<const Rational> v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

json tupleToJson(const IndexTuple& t) {
    json a = json::array();
    for (auto i : t) a.push_back(i + 1);
    return a;
}

json defectsToJson(const std::vector<VectorDefect>& d) {
    json a = json::array();
    for (const auto& x : d) a.push_back({{"at", tupleToJson(x.where)}, {"value", vectorToJson(x.value)}});
    return a;
}

json defectsToJson(const std::vector<ScalarDefect>& d) {
    json a = json::array();
    for (const auto& x : d) a.push_back({{"at", tupleToJson(x.where)}, {"value", x.value.str()}});
    return a;
}

json contactReportToJson(const ContactReport& r) {
    return {{"form", formToJson(r.form)}, {"scalar", r.scalar.str()}, {"contact", r.isContact}};
}

namespace {

json conditionToJson(const ConditionResult& c) {
    return {{"name", c.name}, {"pass", c.pass}, {"witnesses", defectsToJson(c.witnesses)}};
}

} // namespace

json verdictToJson(const Verdict& v) {
    json conditions = json::array();
    for (const auto& c : v.conditions) conditions.push_back(conditionToJson(c));
    json violated = json::array();
    for (const auto& c : v.violated) violated.push_back(c.name);
    return {{"isAffine", v.isAffine},
            {"case", caseName(v.theoremCase)},
            {"conditions", conditions},
            {"violated", violated},
            {"theoremConditionsHold", v.theoremConditionsHold()},
            {"auxiliary", conditionToJson(v.auxiliary)},
            {"oracle",
             {{"flat", v.isAffine},
              {"torsionDefects", defectsToJson(v.torsionDefects)},
              {"curvatureDefects", defectsToJson(v.curvatureDefects)}}},
            {"agreement", v.agrees()},
            {"findings", v.findings}};
}

// ---------------------------------------------------------------------------

json readJsonFile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path.string() + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return json::parse(buffer.str());
    } catch (const json::parse_error& e) {
        throw Error(path.string() + ": " + e.what());
    }
}

void writeJsonFile(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << j.dump(2) << '\n';
}

namespace {

template <class F>
auto withFile(const std::filesystem::path& path, F&& parse) {
    const json j = readJsonFile(path);
    try {
        return parse(j);
    } catch (const Error& e) {
        throw Error(path.string() + ": " + e.what());
    }
}

} // namespace

LieAlgebra readAlgebra(const std::filesystem::path& path) { return withFile(path, algebraFromJson); }
KForm readForm(const std::filesystem::path& path) { return withFile(path, formFromJson); }
LiftData readLiftData(const std::filesystem::path& path) { return withFile(path, liftDataFromJson); }

Vector parseRationalList(const std::string& text) {
    Vector out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        out.push_back(Rational::parse(b == std::string::npos ? "" : item.substr(b, e - b + 1)));
    }
    return out;
}

std::string formatVector(std::span<const Rational> v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + "]";
}

std::string formatTuple(const IndexTuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i] + 1);
    return s + ")";
}

std::string formatCombination(std::span<const Rational> v, const std::vector<std::string>& names) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].isZero()) continue;
        const Rational mag = v[i].sign() < 0 ? -v[i] : v[i];
        if (s.empty())
            s += v[i].sign() < 0 ? "-" : "";
        else
            s += v[i].sign() < 0 ? " - " : " + ";
        if (mag != Rational(1)) s += mag.str() + " ";
        s += i < names.size() ? names[i] : "e" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

} // namespace lieaff::io
