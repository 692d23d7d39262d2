#include "cremona/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cremona/catalog.hpp"
#include "cremona/detail/expr.hpp"
#include "cremona/dynamics.hpp"
#include "cremona/error.hpp"
#include "cremona/numerics.hpp"
#include "cremona/polyaut.hpp"
#include "cremona/ratmap.hpp"
#include "cremona/weyl.hpp"

namespace cremona::cli {

namespace {

using json = nlohmann::ordered_json;

struct Globals {
    std::string format = "text";
    long long discriminant = 0;
    std::size_t budget_digits = 1000000;
    std::uint64_t seed = 1;
    int horizon = 0;
};

struct Ctx {
    Globals g;
    std::string command;
    long long field = 0;  // working field seen so far
    std::ostream* out;
};

void widen(Ctx& c, long long d) { c.field = merge_field(c.field, d); }

RatMap read_map(Ctx& c, const std::string& s) {
    RatMap f = RatMap::parse(s);
    widen(c, f.field());
    return f;
}

json complex_json(ComplexF z) { return json::array({z.real(), z.imag()}); }

json int_poly_json(const IntPoly& p) {
    json a = json::array();
    for (auto& c : p.coeffs()) {
        if (c.fits_slong_p()) a.push_back(c.get_si());
        else a.push_back(c.get_str());
    }
    return a;
}

json points_json(const std::vector<ProjPoint>& ps) {
    json a = json::array();
    for (auto& p : ps) a.push_back(p.str());
    return a;
}

std::pair<ComplexF, ComplexF> complex_pair(const std::string& s) {
    auto parts = detail::split_top(s, ',');
    if (parts.size() != 2) throw Error("UsageError", "expected two comma-separated values, got '" + s + "'");
    return {parse_complex(parts[0]), parse_complex(parts[1])};
}

// projective distance of two complex points, scale free
double proj_gap(const std::array<ComplexF, 3>& u, const std::array<ComplexF, 3>& v) {
    ComplexF c0 = u[1] * v[2] - u[2] * v[1], c1 = u[2] * v[0] - u[0] * v[2], c2 = u[0] * v[1] - u[1] * v[0];
    double nu = std::sqrt(std::norm(u[0]) + std::norm(u[1]) + std::norm(u[2]));
    double nv = std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
    return std::sqrt(std::norm(c0) + std::norm(c1) + std::norm(c2)) / (nu * nv);
}

std::pair<ComplexF, ComplexF> phi_numeric(int j, ComplexF t) {
    if (j < 1 || j > 3) throw Error("UsageError", "--j must be 1, 2 or 3");
    ComplexF t2 = t * t, t3 = t2 * t;
    if (j == 1) return {(t - t3 - t2 * t2) / (1.0 + 2.0 * t + t2), (1.0 - t3 * t2) / (t2 + t3)};
    if (j == 2) return {(t + t2 + t3) / (1.0 + 2.0 * t + t2), (t3 - 1.0) / (t + t2)};
    return {1.0 + t, t - 1.0 / t};
}

void print_text(std::ostream& os, const json& j) {
    for (auto& [k, v] : j.items()) {
        os << k << ": ";
        if (v.is_string()) os << v.get<std::string>();
        else os << v.dump();
        os << "\n";
    }
}

void emit(Ctx& c, json body) {
    if (c.g.format == "json") {
        json j;
        j["tool_version"] = CREMONA_VERSION;
        j["field_discriminant"] = c.field;
        j["command"] = c.command;
        for (auto& [k, v] : body.items()) j[k] = v;
        *c.out << j.dump(2) << "\n";
    } else {
        print_text(*c.out, body);
    }
}

// subcommands

struct MapOpts {
    std::string f, g, inv;
    int power = 1;
    int degree = 0;
    std::string monomial;
    std::string mode = "auto";
};

void cmd_map_info(Ctx& c, const MapOpts& o) {
    RatMap f = read_map(c, o.f);
    long long d = merge_field(c.field, c.g.discriminant);
    json j;
    j["map"] = f.str();
    j["degree"] = f.degree();
    j["is_identity"] = f.is_identity();
    HomPoly J = jacobian_det(f.components());
    j["jacobian_det"] = J.str();
    json lines = json::array();
    if (!J.is_zero() && J.degree() > 0) {
        LinearSplit split = linear_factors(J, d);
        for (auto& lf : split.factors) {
            json l;
            l["line"] = lf.line.str();
            l["mult"] = lf.mult;
            std::optional<ProjPoint> t;
            try {
                t = is_contracted_line(f, lf.line);
            } catch (const Error&) {
            }
            l["contracted_to"] = t ? json(t->str()) : json(nullptr);
            lines.push_back(l);
        }
        if (split.residual.degree() > 0) j["det_jac_residual"] = split.residual.str();
    }
    j["det_jac_lines"] = lines;
    PointSet ind = indeterminacy_points(f, d);
    j["ind_points"] = points_json(ind.points);
    j["ind_points_complete"] = ind.complete;
    if (f.degree() <= 4) {
        auto inv = inverse(f, f.degree());
        j["inverse"] = inv ? json(inv->str()) : json(nullptr);
    }
    c.field = d;
    emit(c, j);
}

void cmd_compose(Ctx& c, const MapOpts& o) {
    RatMap f = read_map(c, o.f);
    json j;
    j["f"] = f.str();
    RatMap r = f;
    if (!o.g.empty()) {
        RatMap g = read_map(c, o.g);
        j["g"] = g.str();
        r = compose(f, g);
    }
    if (o.power != 1) {
        if (o.power < 1) throw Error("UsageError", "--power must be positive");
        r = power(r, o.power);
        j["power"] = o.power;
    }
    j["result"] = r.str();
    j["degree"] = r.degree();
    j["is_identity"] = r.is_identity();
    emit(c, j);
}

void cmd_invert(Ctx& c, const MapOpts& o) {
    RatMap f = read_map(c, o.f);
    int d = o.degree > 0 ? o.degree : f.degree();
    auto inv = inverse(f, d);
    if (!inv) throw Error("NotFound", "no inverse of degree " + std::to_string(d));
    json j;
    j["map"] = f.str();
    j["inverse"] = inv->str();
    j["degree"] = inv->degree();
    j["verified"] = compose(*inv, f).is_identity() && compose(f, *inv).is_identity();
    emit(c, j);
}

void cmd_classify(Ctx& c, const MapOpts& o) {
    auto raw = RatMap::parse_raw(o.f);
    for (auto& p : raw) widen(c, p.field());
    long long d = merge_field(c.field, c.g.discriminant);
    c.field = d;
    QuadClass q = quadratic_classify(raw, d);
    if (q.stratum == Stratum::FieldObstruction) throw Error("FieldObstruction", q.note);
    json j;
    int deg = -1;
    for (auto& p : raw)
        if (!p.is_zero()) deg = p.degree();
    try {
        RatMap f = normalize(raw);
        j["map"] = f.str();
        deg = f.degree();
    } catch (const Error&) {
    }
    j["degree"] = deg;
    j["stratum"] = stratum_name(q.stratum);
    json lines = json::array(), targets = json::array();
    for (auto& lf : q.det_jac_lines) lines.push_back({{"line", lf.line.str()}, {"mult", lf.mult}});
    for (auto& t : q.contraction_targets) targets.push_back(t ? json(t->str()) : json(nullptr));
    j["det_jac_lines"] = lines;
    j["contraction_targets"] = targets;
    j["ind_points"] = points_json(q.ind_points.points);
    j["ind_points_complete"] = q.ind_points.complete;
    if (!q.note.empty()) j["note"] = q.note;
    emit(c, j);
}

RatMap growth_map(Ctx& c, const MapOpts& o) {
    if (!o.monomial.empty()) {
        auto rows = detail::split_top(o.monomial, ';');
        if (rows.size() != 2) throw Error("UsageError", "--monomial wants 'a,b;c,d'");
        std::array<std::array<long, 2>, 2> B{};
        for (int i = 0; i < 2; ++i) {
            auto e = detail::split_top(rows[i], ',');
            if (e.size() != 2) throw Error("UsageError", "--monomial wants 'a,b;c,d'");
            for (int k = 0; k < 2; ++k) {
                try {
                    B[i][k] = std::stol(e[k]);
                } catch (const std::exception&) {
                    throw Error("UsageError", "bad exponent '" + e[k] + "'");
                }
            }
        }
        return monomial_map(B);
    }
    if (o.f.empty()) throw Error("UsageError", "--map or --monomial is required");
    return read_map(c, o.f);
}

int default_horizon(const Ctx& c, const RatMap& f) {
    if (c.g.horizon > 0) return c.g.horizon;
    return f.degree() <= 2 ? 12 : 8;
}

void cmd_growth(Ctx& c, const MapOpts& o) {
    RatMap f = growth_map(c, o);
    int N = default_horizon(c, f);
    DynConfig cfg;
    cfg.budget_digits = c.g.budget_digits;
    cfg.seed = c.g.seed;
    if (o.mode == "auto") cfg.mode = DegreeMode::Auto;
    else if (o.mode == "exact") cfg.mode = DegreeMode::Exact;
    else if (o.mode == "probe") cfg.mode = DegreeMode::Probe;
    else throw Error("UsageError", "--mode is auto, exact or probe");
    DegreeSequence s = degree_sequence(f, N, cfg);
    GrowthClass gc = growth_classify(s, [&](int k) { return power(f, k).is_identity(); });
    if (c.g.format == "csv") {
        *c.out << "k,deg,ratio\n";
        for (std::size_t k = 0; k < s.degrees.size(); ++k) {
            double prev = k == 0 ? 1.0 : double(s.degrees[k - 1]);
            *c.out << k + 1 << "," << s.degrees[k] << "," << double(s.degrees[k]) / prev << "\n";
        }
        return;
    }
    json j;
    j["map"] = f.str();
    j["horizon"] = N;
    j["degrees"] = s.degrees;
    j["exact_upto"] = s.exact_upto;
    j["period"] = s.period;
    j["method"] = s.method;
    j["lambda"] = gc.lambda;
    j["growth"] = growth_name(gc.label);
    j["residuals"] = {{"linear", gc.residuals[0]}, {"quadratic", gc.residuals[1]}, {"exponential", gc.residuals[2]}};
    if (!gc.note.empty()) j["note"] = gc.note;
    emit(c, j);
}

void cmd_stability(Ctx& c, const MapOpts& o) {
    RatMap f = read_map(c, o.f);
    int N = default_horizon(c, f);
    std::optional<RatMap> finv;
    if (!o.inv.empty()) finv = read_map(c, o.inv);
    else finv = inverse(f, f.degree());
    if (!finv) throw Error("NotFound", "no inverse of degree " + std::to_string(f.degree()) + ", pass --inverse");
    StabilityReport r = stability_probe(f, *finv, N);
    json j;
    j["map"] = f.str();
    j["inverse"] = finv->str();
    j["horizon"] = r.horizon;
    j["targets"] = points_json(r.targets);
    j["ind_points"] = points_json(r.ind_points);
    json col = json::array();
    for (auto& x : r.collisions) col.push_back({{"target", x.target.str()}, {"k", x.k}, {"ind_point", x.ind_point.str()}});
    j["collisions"] = col;
    j["stable_up_to_horizon"] = r.collisions.empty();
    j["summary"] = r.summary;
    emit(c, j);
}

void cmd_jung(Ctx& c, const std::string& aut_s) {
    PolyAut f = PolyAut::parse(aut_s);
    widen(c, aut_to_ratmap(f).field());
    auto w = jung_decompose(f);
    if (!w) throw Error("NotAutomorphism", "jacobian " + f.jacobian().str() + " is not a nonzero constant");
    json j;
    j["aut"] = f.str();
    j["degree"] = f.degree();
    json fs = json::array();
    for (auto& x : w->factors) fs.push_back({{"group", x.affine ? "A" : "E"}, {"map", x.str()}});
    j["factors"] = fs;
    j["word"] = w->str();
    j["verified"] = w->recompose() == f;
    HenonReport h = henon_classify(f);
    json hj;
    hj["is_henon"] = h.is_henon;
    json cf = json::array();
    for (auto& x : h.cyclic_factors) cf.push_back({{"P", x.P.str("y")}, {"delta", x.delta.str()}, {"map", x.as_aut().str()}});
    hj["cyclic_factors"] = cf;
    hj["dyn_degree"] = h.dyn_degree;
    if (h.is_henon) {
        hj["conjugator"] = h.conjugator.str();
        hj["verified"] = h.verified;
    }
    j["henon"] = hj;
    emit(c, j);
}

struct WeylOpts {
    int n = 0;
    bool standard = false, charpoly = false, classify = false, group_order = false;
    std::string order;
    std::uint64_t budget = 1000000;
};

void cmd_weyl(Ctx& c, const WeylOpts& o) {
    IntMatrix w;
    json j;
    j["n"] = o.n;
    if (!o.order.empty()) {
        if (o.standard) throw Error("UsageError", "--standard and --order exclude each other");
        std::vector<int> ord;
        for (auto& s : detail::split_top(o.order, ',')) {
            try {
                ord.push_back(std::stoi(s));
            } catch (const std::exception&) {
                throw Error("UsageError", "bad index '" + s + "' in --order");
            }
        }
        w = coxeter_element(o.n, ord);
        j["order"] = ord;
    } else {
        w = standard_element(o.n);
    }
    j["matrix"] = w.rows();
    j["preserves_form"] = preserves_form(w);
    if (o.charpoly || o.classify) {
        IntPoly p = char_poly(w);
        if (o.charpoly) {
            j["charpoly"] = p.str("X");
            j["charpoly_coeffs"] = int_poly_json(p);
        }
        if (o.classify) {
            SalemReport r = salem_classify(p);
            j["salem_class"] = salem_name(r.cls);
            j["dominant_root"] = r.dominant_root;
            j["cyclotomic_orders"] = r.cyclotomic;
            if (!r.note.empty()) j["note"] = r.note;
        }
    }
    if (o.group_order) j["group_order"] = group_order_bfs(o.n, o.budget);
    emit(c, j);
}

bool cmd_catalog_verify(Ctx& c, const std::vector<std::string>& names) {
    json reps = json::array();
    bool all = true;
    for (auto& n : names) {
        VerifyReport r = verify_entry(n);
        json items = json::array();
        for (auto& it : r.items) items.push_back({{"label", it.label}, {"pass", it.pass}, {"detail", it.detail}});
        reps.push_back({{"name", r.name}, {"pass", r.all_pass()}, {"items", items}});
        all = all && r.all_pass();
    }
    if (c.g.format == "json") {
        emit(c, {{"reports", reps}, {"all_pass", all}});
    } else {
        for (auto& r : reps) {
            *c.out << (r["pass"].get<bool>() ? "PASS " : "FAIL ") << r["name"].get<std::string>() << "\n";
            for (auto& it : r["items"])
                *c.out << "  " << (it["pass"].get<bool>() ? "ok   " : "FAIL ") << it["label"].get<std::string>()
                       << (it["detail"].get<std::string>().empty() ? "" : "  [" + it["detail"].get<std::string>() + "]")
                       << "\n";
        }
    }
    return all;
}

struct OrbitOpts {
    std::string family = "fab", alpha, beta, seed = "1e-4i,1e-4i", proj = "omega1", out;
    std::size_t n = 1000;
    std::size_t stride = 1;
};

void cmd_orbit(Ctx& c, const OrbitOpts& o) {
    Family fam = parse_family(o.family);
    Projection pr = parse_projection(o.proj);
    if (o.alpha.empty() || o.beta.empty()) throw Error("UsageError", "--alpha and --beta are required");
    if (o.stride == 0) throw Error("UsageError", "--stride must be positive");
    ComplexF p1 = parse_complex(o.alpha), p2 = parse_complex(o.beta);
    auto [s0, s1] = complex_pair(o.seed);
    Orbit orb = iterate_family(fam, p1, p2, {s0, s1}, o.n);
    OrbitCloud cl = project_cloud(orb, pr);

    std::ofstream file;
    std::ostream* csv = c.out;
    if (!o.out.empty() && o.out != "-") {
        file.open(o.out);
        if (!file) throw Error("IoError", "cannot write " + o.out);
        csv = &file;
    }
    csv->precision(17);
    *csv << "n,u,v,w\n";
    std::size_t written = 0;
    for (auto& p : cl.points) {
        if (p.n % o.stride) continue;
        *csv << p.n << "," << p.c[0] << "," << p.c[1] << "," << p.c[2] << "\n";
        ++written;
    }
    if (csv == c.out) return;

    double max_x = 0, drift = 0;
    double y0 = std::abs(s1);
    for (auto& q : orb.points) {
        max_x = std::max(max_x, std::abs(q[0]));
        if (y0 > 0) drift = std::max(drift, std::abs(std::abs(q[1]) - y0) / y0);
    }
    json j;
    j["family"] = family_name(fam);
    j["projection"] = o.proj;
    j["iterates"] = orb.points.size();
    j["rows_written"] = written;
    j["diverged"] = orb.diverged;
    j["max_abs_x"] = max_x;
    j["abs_y_rel_drift"] = drift;
    j["out"] = o.out;
    emit(c, j);
}

struct VnOpts {
    int n = 7;
    std::string guess, t;
    int j = 1;
    int max_steps = 200;
};

void cmd_vn(Ctx& c, const VnOpts& o) {
    if (o.n < 3) throw Error("UsageError", "--n must be at least 3");
    ComplexF a0, b0;
    json j;
    if (!o.guess.empty()) {
        std::tie(a0, b0) = complex_pair(o.guess);
    } else {
        ComplexF t = o.t.empty() ? ComplexF(dominant_root_modulus(chi_n(o.n)), 0) : parse_complex(o.t);
        std::tie(a0, b0) = phi_numeric(o.j, t);
        j["seed_t"] = complex_json(t);
        j["seed_j"] = o.j;
    }
    j["n"] = o.n;
    j["guess"] = {complex_json(a0), complex_json(b0)};
    VnSolution s = newton_solve_vn(o.n, a0, b0, o.max_steps);
    j["a"] = complex_json(s.a);
    j["b"] = complex_json(s.b);
    j["residual"] = s.residual;
    j["steps"] = s.steps;
    auto orbit = bk_orbit_numeric(s.a, s.b, o.n);
    std::array<ComplexF, 3> pstar{1.0, -s.b, -s.a};
    bool distinct = true;
    for (int i = 0; i < o.n; ++i) {
        if (proj_gap(orbit[i], pstar) < 1e-6) distinct = false;
        for (int k = 0; k < i; ++k)
            if (proj_gap(orbit[i], orbit[k]) < 1e-6) distinct = false;
    }
    j["orbit_distinct"] = distinct;
    j["end_gap"] = proj_gap(orbit[o.n], pstar);
    emit(c, j);
}

void cmd_noether(Ctx& c, int nu, int largest) {
    auto ps = noether_solve(nu, largest > 0 ? std::optional<int>(largest) : std::nullopt);
    json arr = json::array();
    for (auto& p : ps) arr.push_back(p.m);
    json j;
    j["nu"] = nu;
    if (largest > 0) j["largest"] = largest;
    j["count"] = ps.size();
    j["profiles"] = arr;
    emit(c, j);
}

bool squarefree(long long d) {
    if (d == 0 || d == 1) return true;
    unsigned long long a = d < 0 ? -(unsigned long long)d : d;
    for (unsigned long long p = 2; p * p <= a; ++p)
        if (a % (p * p) == 0) return false;
    return true;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cremona: exact computations with plane Cremona transformations", "cremona"};
    app.set_version_flag("--version", std::string(CREMONA_VERSION));
    app.require_subcommand(1);
    app.fallthrough();
    app.allow_config_extras(CLI::config_extras_mode::error);

    Ctx c;
    c.out = &out;
    app.set_config("--config", "", "key = value file (discriminant, budget_digits, seed, horizon)");
    app.add_option("--format", c.g.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--discriminant", c.g.discriminant, "working field Q(sqrt d)");
    app.add_option("--budget-digits,--budget_digits", c.g.budget_digits, "coefficient digit budget");
    app.add_option("--seed", c.g.seed, "seed for randomized probes");
    app.add_option("--horizon", c.g.horizon, "iterate count for growth and stability");

    MapOpts mo;
    auto add_f = [&](CLI::App* s, bool required) {
        auto* opt = s->add_option("--f,--map", mo.f, "map 'X : Y : Z'");
        if (required) opt->required();
    };

    auto* s_info = app.add_subcommand("map-info", "degree, exceptional lines, indeterminacy, inverse");
    add_f(s_info, true);
    auto* s_comp = app.add_subcommand("compose", "f after g, or a power of f");
    add_f(s_comp, true);
    s_comp->add_option("--g", mo.g, "inner map");
    s_comp->add_option("--power", mo.power, "iterate the result");
    auto* s_inv = app.add_subcommand("invert", "inverse by linear ansatz");
    add_f(s_inv, true);
    s_inv->add_option("--degree", mo.degree, "degree of the inverse (default deg f)");
    auto* s_cls = app.add_subcommand("classify-quadratic", "Sigma stratum of a quadratic map");
    add_f(s_cls, true);
    auto* s_gro = app.add_subcommand("growth", "degree sequence, dynamical degree, growth class");
    add_f(s_gro, false);
    s_gro->add_option("--monomial", mo.monomial, "exponent matrix 'a,b;c,d'");
    s_gro->add_option("--mode", mo.mode, "auto, exact or probe");
    auto* s_sta = app.add_subcommand("stability", "bounded-horizon algebraic stability check");
    add_f(s_sta, true);
    s_sta->add_option("--inverse", mo.inv, "inverse map (default: solved)");

    std::string aut;
    auto* s_jung = app.add_subcommand("jung", "Jung decomposition and Henon classification");
    s_jung->add_option("--aut", aut, "automorphism 'f1, f2'")->required();

    WeylOpts wo;
    auto* s_weyl = app.add_subcommand("weyl", "Coxeter elements of W_n");
    s_weyl->add_option("--n", wo.n, "number of points")->required();
    s_weyl->add_flag("--standard", wo.standard, "standard element (default)");
    s_weyl->add_option("--order", wo.order, "Coxeter element from simple reflections, comma list");
    s_weyl->add_flag("--charpoly", wo.charpoly, "characteristic polynomial");
    s_weyl->add_flag("--classify", wo.classify, "Salem/Pisot classification");
    s_weyl->add_flag("--group-order", wo.group_order, "order of W_n by orbit enumeration");
    s_weyl->add_option("--budget", wo.budget, "orbit size budget");

    auto* s_cat = app.add_subcommand("catalog", "named examples and their checks");
    s_cat->require_subcommand(1);
    auto* s_list = s_cat->add_subcommand("list", "list entries");
    std::string vname;
    bool vall = false;
    auto* s_ver = s_cat->add_subcommand("verify", "run checks");
    s_ver->add_option("name", vname, "entry name");
    s_ver->add_flag("--all", vall, "every entry");

    OrbitOpts oo;
    auto* s_orb = app.add_subcommand("orbit", "orbit cloud of a numeric family as CSV");
    s_orb->add_option("--family", oo.family, "fab, bk or mcmullen");
    s_orb->add_option("--alpha,--a", oo.alpha, "first parameter");
    s_orb->add_option("--beta,--b", oo.beta, "second parameter");
    s_orb->add_option("--seed", oo.seed, "starting point 'x,y'");
    s_orb->add_option("--n", oo.n, "iterates");
    s_orb->add_option("--proj", oo.proj, "omega1 or omega2");
    s_orb->add_option("--out", oo.out, "CSV file (default stdout)");
    s_orb->add_option("--stride", oo.stride, "keep every k-th iterate");

    VnOpts vo;
    auto* s_vn = app.add_subcommand("vn-solve", "Newton solve for parameters on V_n");
    s_vn->add_option("--n", vo.n, "orbit length");
    s_vn->add_option("--guess", vo.guess, "starting 'a,b'");
    s_vn->add_option("--j", vo.j, "seed from phi_j(t)");
    s_vn->add_option("--t", vo.t, "seed parameter t (default: dominant root of chi_n)");
    s_vn->add_option("--max-steps", vo.max_steps, "Newton steps");

    int nu = 0, largest = 0;
    auto* s_noe = app.add_subcommand("noether", "multiplicity profiles solving the Noether relations");
    s_noe->add_option("--nu", nu, "degree")->required();
    s_noe->add_option("--largest", largest, "fix m1");

    std::vector<std::string> argv(args);
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << CREMONA_VERSION << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    }
    if (!squarefree(c.g.discriminant)) {
        err << "usage error: discriminant must be squarefree\n";
        return kUsageError;
    }
    if (c.g.discriminant == 1) c.g.discriminant = 0;
    c.field = c.g.discriminant;

    try {
        CLI::App* sub = app.get_subcommands().front();
        c.command = sub->get_name();
        if (c.g.format == "csv" && sub != s_gro && sub != s_orb)
            throw Error("UsageError", "--format csv is only for growth and orbit");
        if (sub == s_info) cmd_map_info(c, mo);
        else if (sub == s_comp) cmd_compose(c, mo);
        else if (sub == s_inv) cmd_invert(c, mo);
        else if (sub == s_cls) cmd_classify(c, mo);
        else if (sub == s_gro) cmd_growth(c, mo);
        else if (sub == s_sta) cmd_stability(c, mo);
        else if (sub == s_jung) cmd_jung(c, aut);
        else if (sub == s_weyl) cmd_weyl(c, wo);
        else if (sub == s_cat) {
            if (s_list->parsed()) {
                json a = json::array();
                for (auto& n : catalog_names()) a.push_back({{"name", n}, {"description", catalog_description(n)}});
                if (c.g.format == "json") emit(c, {{"entries", a}});
                else
                    for (auto& e : a) out << e["name"].get<std::string>() << "  " << e["description"].get<std::string>() << "\n";
            } else {
                if (vall == !vname.empty()) throw Error("UsageError", "give an entry name or --all");
                std::vector<std::string> names = vall ? catalog_names() : std::vector<std::string>{vname};
                c.command = "catalog verify";
                if (!cmd_catalog_verify(c, names)) {
                    err << "VerificationFailed: some catalog checks failed\n";
                    return kDomainError;
                }
            }
        } else if (sub == s_orb) cmd_orbit(c, oo);
        else if (sub == s_vn) cmd_vn(c, vo);
        else if (sub == s_noe) cmd_noether(c, nu, largest);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        if (e.code() == "UsageError" || e.code() == "ParseError") return kUsageError;
        return kDomainError;
    } catch (const std::exception& e) {
        err << "error: InternalError: " << e.what() << "\n";
        return kDomainError;
    }
    return kOk;
}

}  // namespace cremona::cli
