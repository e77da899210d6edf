// lieaff: exact construction and verification of affine structures on
// nilpotent contact Lie algebras.
//
// Exit codes: 0 property confirmed, 1 property refuted (with witnesses),
// 2 input or usage error.

#include "lieaff/catalog.hpp"
#include "lieaff/error.hpp"
#include "lieaff/extension.hpp"
#include "lieaff/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>

using namespace lieaff;
using io::json;

namespace {

constexpr int kConfirmed = 0;
constexpr int kRefuted = 1;
constexpr int kInputError = 2;

struct Options {
    bool json = false;
    std::string algebraFile;
    std::string formFile;
    std::string symplecticFile;
    std::string liftFile;
    std::string alpha;
    std::string out;
    bool search = false;
    bool half = false;
    std::size_t attempts = 200;
    std::uint64_t seed = kDefaultSeed;
    std::vector<std::string> emit;
};

std::vector<std::string> dualNames(const LieAlgebra& L) {
    auto names = L.basisNames();
    for (auto& s : names) s += "*";
    return names;
}

std::string formText(const KForm& f, const LieAlgebra& L) {
    if (f.degree() == 1) return io::formatCombination(f.asVector(), dualNames(L));
    std::string s;
    for (const auto& [idx, c] : f.coeffs()) {
        std::string term;
        for (std::size_t a = 0; a < idx.size(); ++a) term += (a ? "^" : "") + L.basisNames()[idx[a]] + "*";
        const Rational mag = c.sign() < 0 ? -c : c;
        s += s.empty() ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
        s += (mag == Rational(1) ? "" : mag.str() + " ") + term;
    }
    return s.empty() ? "0" : s;
}

void printDefects(std::ostream& os, const std::string& label, const std::vector<VectorDefect>& d) {
    os << label << ": " << d.size() << '\n';
    for (const auto& x : d) os << "  at " << io::formatTuple(x.where) << ": " << io::formatVector(x.value) << '\n';
}

void printDefects(std::ostream& os, const std::string& label, const std::vector<ScalarDefect>& d) {
    os << label << ": " << d.size() << '\n';
    for (const auto& x : d) os << "  at " << io::formatTuple(x.where) << ": " << x.value << '\n';
}

/// Loads an algebra and rejects Jacobi violations.
LieAlgebra loadLie(const std::string& path) {
    LieAlgebra L = io::readAlgebra(path);
    requireLie(L);
    return L;
}

KForm loadFormFor(const std::string& path, const LieAlgebra& L, std::size_t degree) {
    KForm f = io::readForm(path);
    if (f.dim() != L.dim()) throw Error(path + ": form dimension " + std::to_string(f.dim()) +
                                        " does not match algebra dimension " + std::to_string(L.dim()));
    if (f.degree() != degree) throw Error(path + ": expected a " + std::to_string(degree) + "-form");
    return f;
}

std::filesystem::path siblingPath(const std::filesystem::path& file, const std::string& tag) {
    std::filesystem::path p = file;
    p.replace_filename(file.stem().string() + "." + tag + ".json");
    return p;
}

void emitJson(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

int cmdCheck(const Options& o) {
    const LieAlgebra L = io::readAlgebra(o.algebraFile);
    const auto jac = jacobiDefect(L);
    json j{{"name", L.name()}, {"dim", L.dim()}, {"jacobi", jac.empty()}, {"jacobiDefects", io::defectsToJson(jac)}};
    if (!jac.empty()) {
        if (o.json) {
            emitJson(j);
        } else {
            std::cout << "algebra: " << L.name() << " (dim " << L.dim() << ")\n";
            printDefects(std::cout, "jacobi: FAILED, defects", jac);
        }
        return kRefuted;
    }
    const auto lcs = lowerCentralDims(L);
    const Subspace z = center(L);
    const bool nil = lcs.back() == 0;
    json centerJson = json::array();
    for (const auto& v : z.basis) centerJson.push_back(io::vectorToJson(v));
    j["lcs"] = lcs;
    j["nilpotent"] = nil;
    j["nilpotencyClass"] = nil ? json(lcs.size() - 1) : json(nullptr);
    j["center"] = {{"dim", z.dim()}, {"basis", centerJson}};
    if (o.json) {
        emitJson(j);
        return kConfirmed;
    }
    std::cout << "algebra: " << L.name() << " (dim " << L.dim() << ")\n";
    std::cout << "jacobi: ok\n";
    std::cout << "lcs: [";
    for (std::size_t i = 0; i < lcs.size(); ++i) std::cout << (i ? "," : "") << lcs[i];
    std::cout << "]\n";
    std::cout << "nilpotent: " << (nil ? "yes, class " + std::to_string(lcs.size() - 1) : std::string("no")) << '\n';
    std::cout << "center: dim " << z.dim();
    if (z.dim() > 0) {
        std::cout << " (";
        for (std::size_t i = 0; i < z.dim(); ++i)
            std::cout << (i ? "; " : "") << io::formatCombination(z.basis[i], L.basisNames());
        std::cout << ")";
    }
    std::cout << '\n';
    return kConfirmed;
}

int cmdContact(const Options& o) {
    const LieAlgebra L = loadLie(o.algebraFile);
    if (L.dim() % 2 == 0) throw Error("contact forms need odd dimension, got " + std::to_string(L.dim()));
    if (o.formFile.empty() == !o.search) throw Error("give exactly one of --form or --search");
    if (!o.formFile.empty()) {
        const ContactReport r = contactTest(L, loadFormFor(o.formFile, L, 1));
        if (o.json)
            emitJson(io::contactReportToJson(r));
        else
            std::cout << "form: " << formText(r.form, L) << "\nscalar = " << r.scalar
                      << ", contact: " << (r.isContact ? "yes" : "no") << '\n';
        return r.isContact ? kConfirmed : kRefuted;
    }
    const ContactSearch s = searchContactForm(L, o.attempts, o.seed);
    if (o.json) {
        emitJson({{"seed", s.seed},
                  {"attempts", s.attempts},
                  {"tried", s.tried.size()},
                  {"found", s.found ? io::contactReportToJson(*s.found) : json(nullptr)},
                  {"probabilistic", !s.found.has_value()}});
    } else {
        std::cout << "seed: " << s.seed << ", random attempts: " << s.attempts << ", forms tried: " << s.tried.size()
                  << '\n';
        if (s.found) {
            const bool dualPass = s.tried.size() <= L.dim();
            std::cout << "found: " << formText(s.found->form, L) << (dualPass ? " (dual-basis pass)" : " (random pass)")
                      << "\nscalar = " << s.found->scalar << ", contact: yes\n";
        } else {
            std::cout << "no contact form found (probabilistic)\n";
        }
    }
    return s.found ? kConfirmed : kRefuted;
}

int cmdQuotient(const Options& o) {
    const LieAlgebra L = loadLie(o.algebraFile);
    const KForm omega = loadFormFor(o.formFile, L, 1);
    if (L.dim() % 2 == 0) throw Error("contact forms need odd dimension, got " + std::to_string(L.dim()));
    const ContactReport r = contactTest(L, omega);
    if (!r.isContact) {
        if (o.json)
            emitJson({{"contact", io::contactReportToJson(r)}});
        else
            std::cout << "form " << formText(omega, L) << " is not contact (scalar = 0)\n";
        return kRefuted;
    }
    const CenterQuotient q = quotientByCenter(L, omega);
    const SymplecticStatus st = symplecticCheck(q.quotient, q.theta);
    const std::string prefix = o.out.empty() ? "quotient" : o.out;
    const std::string algebraPath = prefix + ".algebra.json", thetaPath = prefix + ".theta.json";
    io::writeJsonFile(algebraPath, io::algebraToJson(q.quotient));
    io::writeJsonFile(thetaPath, io::formToJson(q.theta));
    json change = json::array();
    const Matrix B = q.basisChange();
    for (std::size_t c = 0; c < B.cols(); ++c) change.push_back(io::vectorToJson(B.column(c)));
    if (o.json) {
        emitJson({{"quotient", io::algebraToJson(q.quotient)},
                  {"theta", io::formToJson(q.theta)},
                  {"centralGenerator", io::vectorToJson(q.centralGenerator)},
                  {"basisChange", change},
                  {"nondegenerate", st.nondegenerate},
                  {"closed", st.closed},
                  {"files", {algebraPath, thetaPath}}});
    } else {
        std::cout << "center generator T = " << io::formatCombination(q.centralGenerator, L.basisNames())
                  << " (normalized so omega(T) = 1)\n";
        std::cout << "quotient: dim " << q.quotient.dim() << ", basis lifts:";
        for (std::size_t d = 0; d < q.quotient.dim(); ++d)
            std::cout << ' ' << q.quotient.basisNames()[d] << " -> " << io::formatCombination(q.lift.column(d), L.basisNames())
                      << (d + 1 < q.quotient.dim() ? ";" : "");
        std::cout << "\ntheta = " << formText(q.theta, q.quotient) << '\n';
        std::cout << "symplectic: nondegenerate " << (st.nondegenerate ? "yes" : "no") << ", closed "
                  << (st.closed ? "yes" : "no") << '\n';
        std::cout << "wrote " << algebraPath << ", " << thetaPath << '\n';
    }
    return st.symplectic() ? kConfirmed : kRefuted;
}

BilinearProduct canonicalProduct(const LieAlgebra& L, const KForm& theta) {
    const SymplecticStatus st = symplecticCheck(L, theta);
    if (!st.nondegenerate) throw Error("2-form is degenerate (rank < " + std::to_string(L.dim()) + ")");
    if (!st.closed) throw Error("2-form is not a cocycle");
    return affineFromSymplectic(L, theta);
}

int cmdAffine(const Options& o) {
    const LieAlgebra L = loadLie(o.algebraFile);
    const KForm theta = loadFormFor(o.symplecticFile, L, 2);
    const BilinearProduct nabla = canonicalProduct(L, theta);
    const AffineDefects d = verifyAffine(L, nabla);
    if (!o.out.empty()) io::writeJsonFile(o.out, io::productToJson(nabla));
    if (o.json) {
        emitJson({{"product", io::productToJson(nabla)},
                  {"torsionDefects", io::defectsToJson(d.torsion)},
                  {"curvatureDefects", io::defectsToJson(d.curvature)},
                  {"affine", d.affine()}});
    } else {
        bool any = false;
        for (std::size_t i = 0; i < L.dim(); ++i)
            for (std::size_t j = 0; j < L.dim(); ++j)
                if (!isZero(nabla.at(i, j))) {
                    any = true;
                    std::cout << "nabla(" << L.basisNames()[i] << "," << L.basisNames()[j]
                              << ") = " << io::formatCombination(nabla.at(i, j), L.basisNames()) << '\n';
                }
        if (!any) std::cout << "nabla = 0\n";
        std::cout << "torsion defects: " << d.torsion.size() << ", curvature defects: " << d.curvature.size() << '\n';
        if (!o.out.empty()) std::cout << "wrote " << o.out << '\n';
    }
    return d.affine() ? kConfirmed : kRefuted;
}

int cmdExtend(const Options& o) {
    const LieAlgebra L = loadLie(o.algebraFile);
    const KForm theta = loadFormFor(o.symplecticFile, L, 2);
    const CentralExtension E = centralExtend(L, theta);
    const std::size_t m = E.extended.dim();
    const KForm dualCentral = KForm::dual(m, m - 1);
    const std::string prefix = o.out.empty() ? "extension" : o.out;
    const std::string algebraPath = prefix + ".algebra.json", contactPath = prefix + ".contact.json";
    io::writeJsonFile(algebraPath, io::algebraToJson(E.extended));
    io::writeJsonFile(contactPath, io::formToJson(dualCentral));
    std::optional<ContactReport> r;
    if (m % 2 == 1) r = contactTest(E.extended, dualCentral);
    if (o.json) {
        emitJson({{"extended", io::algebraToJson(E.extended)},
                  {"contact", r ? io::contactReportToJson(*r) : json(nullptr)},
                  {"files", {algebraPath, contactPath}}});
    } else {
        std::cout << "extension: dim " << m << ", central vector " << E.extended.basisNames()[m - 1] << '\n';
        for (const auto& [ij, terms] : E.extended.constants()) {
            std::cout << "  [" << E.extended.basisNames()[ij.first] << "," << E.extended.basisNames()[ij.second]
                      << "] = " << io::formatCombination(E.extended.bracketBasis(ij.first, ij.second), E.extended.basisNames())
                      << '\n';
        }
        if (r)
            std::cout << "contact form " << formText(dualCentral, E.extended) << ": scalar = " << r->scalar
                      << ", contact: " << (r->isContact ? "yes" : "no") << '\n';
        else
            std::cout << "extension has even dimension; no contact test\n";
        std::cout << "wrote " << algebraPath << ", " << contactPath << '\n';
    }
    return r && r->isContact ? kConfirmed : kRefuted;
}

Vector parseAlpha(const Options& o, const LieAlgebra& L) {
    Vector a = io::parseRationalList(o.alpha);
    if (a.size() != L.dim())
        throw Error("--alpha has " + std::to_string(a.size()) + " entries, expected " + std::to_string(L.dim()));
    const RepresentationCheck rep = isOneDimRep(L, a);
    if (!rep.isRepresentation)
        throw Error("--alpha is not a one-dimensional representation: alpha" +
                    io::formatTuple(rep.witnesses.front().where) + " bracket = " + rep.witnesses.front().value.str());
    return a;
}

void printCondition(std::ostream& os, const ConditionResult& c) {
    os << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL") << '\n';
    for (const auto& w : c.witnesses) os << "    at " << io::formatTuple(w.where) << ": " << io::formatVector(w.value) << '\n';
}

int cmdLift(const Options& o) {
    const LieAlgebra L = loadLie(o.algebraFile);
    const KForm theta = loadFormFor(o.symplecticFile, L, 2);
    if (o.half == !o.liftFile.empty()) throw Error("give exactly one of --half or --lift");
    const BilinearProduct nabla = canonicalProduct(L, theta);
    const CentralExtension E = centralExtend(L, theta);
    LiftData D = o.half ? LiftData::half(theta) : io::readLiftData(o.liftFile);
    D.validate(L.dim());
    if (!o.alpha.empty()) D.a = parseAlpha(o, L);

    const Verdict v = theoremVerdict(E, nabla, D);
    const Lemma2Report lemma = lemma2Residuals(E, nabla, D);
    const auto nv = necessaryV(E, D);
    std::optional<StarStarResiduals> star;
    if (o.half) star = starStarCheck(L, theta, D.V, D.a);

    if (o.json) {
        json j{{"verdict", io::verdictToJson(v)},
               {"liftData", io::liftDataToJson(D)},
               {"necessaryV", io::defectsToJson(nv)},
               {"mixedCurvature", {{"expansionsAgree", lemma.expansionsAgree()},
                           {"item2Vanishes", lemma.item2Vanishes()},
                           {"mixedVanishes", lemma.mixedVanishes()},
                           {"propositionHolds", lemma.propositionHolds()}}}};
        if (star)
            j["halfLiftRelations"] = {{"first", io::defectsToJson(star->first)}, {"second", io::defectsToJson(star->second)}};
        emitJson(j);
        return v.isAffine ? kConfirmed : kRefuted;
    }
    std::cout << "base: dim " << L.dim() << ", extension: dim " << E.extended.dim() << '\n';
    printDefects(std::cout, "torsion defects", v.torsionDefects);
    printDefects(std::cout, "curvature defects", v.curvatureDefects);
    printDefects(std::cout, "necessary condition on V, violations", nv);
    if (star) {
        printDefects(std::cout, "half-lift first relation residuals", star->first);
        printDefects(std::cout, "half-lift second relation residuals", star->second);
    }
    std::cout << "curvature expansions agree: " << (lemma.expansionsAgree() ? "yes" : "no") << '\n';
    std::cout << "theorem case: " << caseName(v.theoremCase) << '\n';
    for (const auto& c : v.conditions) printCondition(std::cout, c);
    std::cout << "theorem conditions: " << (v.theoremConditionsHold() ? "all pass" : "violated") << '\n';
    printCondition(std::cout, v.auxiliary);
    std::cout << "oracle: " << (v.isAffine ? "flat and torsion-free (affine)" : "not affine") << '\n';
    std::cout << "oracle/theorem agreement: " << (v.agrees() ? "yes" : "no") << '\n';
    for (const auto& f : v.findings) std::cout << "finding: " << f << '\n';
    return v.isAffine ? kConfirmed : kRefuted;
}

std::string matrixText(const Matrix& m) {
    std::string s;
    for (std::size_t r = 0; r < m.rows(); ++r) s += (r ? " " : "") + io::formatVector(m.row(r));
    return s;
}

json matrixJson(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(io::vectorToJson(m.row(r)));
    return rows;
}

int cmdSolveLift(const Options& o) {
    const LieAlgebra L = loadLie(o.algebraFile);
    const KForm theta = loadFormFor(o.symplecticFile, L, 2);
    const BilinearProduct nabla = canonicalProduct(L, theta);
    const Vector a = o.alpha.empty() ? Vector(L.dim()) : parseAlpha(o, L);
    const LiftSpace space = isZero(a) ? solveLiftTrivial(L, theta, nabla) : solveLiftGivenAlpha(L, theta, nabla, a);
    bool anyFlat = false;
    for (const auto& c : space.checked) anyFlat = anyFlat || c.verdict.isAffine;
    if (o.json) {
        json dirs = json::array();
        for (const auto& d : space.directions) dirs.push_back(matrixJson(d));
        json checked = json::array();
        for (const auto& c : space.checked)
            checked.push_back({{"phi", matrixJson(c.phi)}, {"verdict", io::verdictToJson(c.verdict)}});
        emitJson({{"alpha", io::vectorToJson(a)},
                  {"feasible", space.feasible},
                  {"dimension", space.feasible ? json(space.dimension()) : json(nullptr)},
                  {"particular", space.feasible ? matrixJson(space.particular) : json(nullptr)},
                  {"symmetricDirections", dirs},
                  {"checked", checked},
                  {"theoremGapCount", space.theoremGapCount}});
        return space.feasible && anyFlat ? kConfirmed : kRefuted;
    }
    std::cout << "alpha = " << io::formatVector(a) << (isZero(a) ? " (trivial case)" : " (nontrivial case)") << '\n';
    if (!space.feasible) {
        std::cout << "no admissible phi: the linear system is infeasible\n";
        return kRefuted;
    }
    std::cout << "solution space dimension: " << space.dimension() << '\n';
    std::cout << "particular phi: " << matrixText(space.particular) << '\n';
    for (std::size_t d = 0; d < space.directions.size(); ++d)
        std::cout << "symmetric direction " << d + 1 << ": " << matrixText(space.directions[d]) << '\n';
    for (std::size_t c = 0; c < space.checked.size(); ++c) {
        const Verdict& v = space.checked[c].verdict;
        std::cout << (c == 0 ? "particular" : "particular + direction " + std::to_string(c)) << ": oracle "
                  << (v.isAffine ? "flat" : "not flat") << ", theorem conditions "
                  << (v.theoremConditionsHold() ? "pass" : "fail");
        for (const auto& f : v.findings) std::cout << ", finding: " << f;
        std::cout << '\n';
    }
    std::cout << "theorem-gap candidates: " << space.theoremGapCount << '\n';
    return anyFlat ? kConfirmed : kRefuted;
}

int cmdCatalog(const Options& o) {
    if (!o.emit.empty()) {
        const CatalogEntry* e = findCatalogEntry(o.emit[0]);
        if (!e) throw Error("unknown catalog entry '" + o.emit[0] + "'");
        const std::filesystem::path file = o.emit[1];
        std::vector<std::string> written{file.string()};
        io::writeJsonFile(file, io::algebraToJson(e->algebra));
        if (e->contact) {
            written.push_back(siblingPath(file, "contact").string());
            io::writeJsonFile(written.back(), io::formToJson(*e->contact));
        }
        if (e->symplectic) {
            written.push_back(siblingPath(file, "symplectic").string());
            io::writeJsonFile(written.back(), io::formToJson(*e->symplectic));
        }
        if (o.json)
            emitJson({{"emitted", e->name}, {"files", written}});
        else
            for (const auto& w : written) std::cout << "wrote " << w << '\n';
        return kConfirmed;
    }
    json list = json::array();
    for (const auto& e : catalog()) {
        list.push_back({{"name", e.name},
                        {"dim", e.algebra.dim()},
                        {"contact", e.contact ? io::formToJson(*e.contact) : json(nullptr)},
                        {"symplectic", e.symplectic ? io::formToJson(*e.symplectic) : json(nullptr)},
                        {"note", e.note},
                        {"negativeExample", e.negativeExample}});
        if (!o.json) {
            std::cout << e.name << "  dim " << e.algebra.dim();
            if (e.contact) std::cout << "  contact " << formText(*e.contact, e.algebra);
            if (e.symplectic) std::cout << "  symplectic " << formText(*e.symplectic, e.algebra);
            std::cout << "  -- " << e.note << '\n';
        }
    }
    if (o.json) emitJson(list);
    return kConfirmed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact affine structures on nilpotent contact Lie algebras", "lieaff"};
    app.require_subcommand(1);
    Options o;

    auto addJson = [&](CLI::App* c) { c->add_flag("--json", o.json, "Machine-readable JSON on standard output"); };
    auto addAlgebra = [&](CLI::App* c) { c->add_option("algebra", o.algebraFile, "Algebra file")->required(); };

    auto* check = app.add_subcommand("check", "Jacobi identity, lower central series and center");
    addAlgebra(check);
    addJson(check);

    auto* contact = app.add_subcommand("contact", "Evaluate or search for a contact form");
    addAlgebra(contact);
    contact->add_option("--form", o.formFile, "1-form file");
    contact->add_flag("--search", o.search, "Search dual basis, then seeded random forms");
    contact->add_option("--attempts", o.attempts, "Random attempts for --search");
    contact->add_option("--seed", o.seed, "Seed for --search");
    addJson(contact);

    auto* quotient = app.add_subcommand("quotient", "Quotient by the center with the induced symplectic form");
    addAlgebra(quotient);
    quotient->add_option("--form", o.formFile, "Contact form file")->required();
    quotient->add_option("--out", o.out, "Output prefix");
    addJson(quotient);

    auto* affine = app.add_subcommand("affine", "Canonical affine structure of a symplectic Lie algebra");
    addAlgebra(affine);
    affine->add_option("--symplectic", o.symplecticFile, "Symplectic form file")->required();
    affine->add_option("--out", o.out, "Output file for the product table");
    addJson(affine);

    auto* extend = app.add_subcommand("extend", "One-dimensional central extension by a 2-cocycle");
    addAlgebra(extend);
    extend->add_option("--symplectic", o.symplecticFile, "2-cocycle file")->required();
    extend->add_option("--out", o.out, "Output prefix");
    addJson(extend);

    auto* lift = app.add_subcommand("lift", "Lift the canonical affine structure to the central extension");
    addAlgebra(lift);
    lift->add_option("--symplectic", o.symplecticFile, "Symplectic form file")->required();
    lift->add_flag("--half", o.half, "phi = theta/2, V = W0 = 0, rho = 0");
    lift->add_option("--lift", o.liftFile, "Lift data file");
    lift->add_option("--alpha", o.alpha, "Comma-separated values of alpha on the base basis");
    addJson(lift);

    auto* solve = app.add_subcommand("solve-lift", "Solve for all admissible phi");
    addAlgebra(solve);
    solve->add_option("--symplectic", o.symplecticFile, "Symplectic form file")->required();
    solve->add_option("--alpha", o.alpha, "Comma-separated values of alpha on the base basis");
    addJson(solve);

    auto* cat = app.add_subcommand("catalog", "List or emit built-in algebras");
    cat->add_option("--emit", o.emit, "<name> <file>")->expected(2);
    addJson(cat);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (check->parsed()) return cmdCheck(o);
        if (contact->parsed()) return cmdContact(o);
        if (quotient->parsed()) return cmdQuotient(o);
        if (affine->parsed()) return cmdAffine(o);
        if (extend->parsed()) return cmdExtend(o);
        if (lift->parsed()) return cmdLift(o);
        if (solve->parsed()) return cmdSolveLift(o);
        if (cat->parsed()) return cmdCatalog(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
