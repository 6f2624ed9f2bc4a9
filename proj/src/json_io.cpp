#include "twistor/json_io.hpp"

namespace twistor::io {

namespace {

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing JSON field '") + key + "'");
    return j.at(key);
}

mpq_class rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return mpq_class(mpz_class(std::to_string(j.get<long long>())));
    throw InvalidInput("exact rationals must be \"num/den\" strings or integers");
}

}  // namespace

json to_json(const GaussianRational& z) { return json::array({rational_to_string(z.re()), rational_to_string(z.im())}); }

GaussianRational exact_from_json(const json& j) {
    if (j.is_array() && j.size() == 2) return {rational_from_json(j[0]), rational_from_json(j[1])};
    if (j.is_string()) return GaussianRational::parse(j.get<std::string>());
    throw InvalidInput("expected [re, im] pair");
}

json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InvalidInput("expected numeric [re, im] pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

json point_to_json(const ExactPoint& p) {
    json out = json::array();
    for (const auto& c : p) out.push_back(to_json(c));
    return out;
}

json point_to_json(const ApproxPoint& p) {
    json out = json::array();
    for (const auto& c : p) out.push_back(to_json(c));
    return out;
}

ExactPoint point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw InvalidInput("a point needs four coordinates");
    ExactPoint p;
    for (int i = 0; i < 4; ++i) p[i] = exact_from_json(j[i]);
    if (is_zero_vector(p)) throw InvalidInput("zero point");
    return p;
}

json line_to_json(const ExactLine& line) { return {{"points", json::array({point_to_json(line.a()), point_to_json(line.b())})}}; }

ExactLine line_from_json(const json& j) {
    const json& pts = require(j, "points");
    if (!pts.is_array() || pts.size() != 2) throw InvalidInput("a line needs two points");
    return {point_from_json(pts[0]), point_from_json(pts[1])};
}

json quaternion_to_json(const Quaternion& q) { return {{"q1", to_json(q.a())}, {"q2", to_json(q.b())}}; }

Quaternion quaternion_from_json(const json& j) {
    return {exact_from_json(require(j, "q1")), exact_from_json(require(j, "q2"))};
}

json plucker_to_json(const ExactPlucker& t) {
    json coords = json::array();
    for (const auto& c : t.p) coords.push_back(to_json(c));
    return {{"plucker", coords}, {"order", kPluckerOrder}};
}

json plucker_to_json(const ApproxPlucker& t) {
    json coords = json::array();
    for (const auto& c : t.p) coords.push_back(to_json(c));
    return {{"plucker", coords}, {"order", kPluckerOrder}};
}

ExactPlucker plucker_from_json(const json& j) {
    const json& order = require(j, "order");
    if (!order.is_string() || order.get<std::string>() != kPluckerOrder)
        throw InvalidInput(std::string("Plücker order must be \"") + kPluckerOrder + "\"");
    const json& coords = require(j, "plucker");
    if (!coords.is_array() || coords.size() != 6) throw InvalidInput("a Plücker vector needs six coordinates");
    ExactPlucker t;
    for (int k = 0; k < 6; ++k) t[k] = exact_from_json(coords[k]);
    if (is_zero_plucker(t)) throw InvalidInput("zero Plücker vector");
    if (!klein_form(t).is_zero()) throw InvalidInput("Plücker vector is off the Klein quadric");
    return t;
}

json surface_to_json(const ExactForm& f) {
    json coeffs = json::array();
    const auto& ex = exponents(f.degree());
    for (std::size_t k = 0; k < ex.size(); ++k) {
        const auto& c = f.coeffs()[k];
        if (c.is_zero()) continue;
        coeffs.push_back({{"alpha", {ex[k][0], ex[k][1], ex[k][2], ex[k][3]}},
                          {"re", rational_to_string(c.re())},
                          {"im", rational_to_string(c.im())}});
    }
    return {{"degree", f.degree()}, {"order", kMonomialOrder}, {"coeffs", coeffs}};
}

ExactForm surface_from_json(const json& j) {
    const json& deg = require(j, "degree");
    if (!deg.is_number_integer() || deg.get<int>() < 0) throw InvalidInput("degree must be a nonnegative integer");
    const json& order = require(j, "order");
    if (!order.is_string() || order.get<std::string>() != kMonomialOrder)
        throw InvalidInput(std::string("monomial order must be \"") + kMonomialOrder + "\"");
    int d = deg.get<int>();
    ExactForm f(d);
    for (const auto& term : require(j, "coeffs")) {
        const json& alpha = require(term, "alpha");
        if (!alpha.is_array() || alpha.size() != 4) throw InvalidInput("alpha needs four exponents");
        Exponent e{};
        int sum = 0;
        for (int i = 0; i < 4; ++i) {
            if (!alpha[i].is_number_integer() || alpha[i].get<int>() < 0)
                throw InvalidInput("exponents must be nonnegative integers");
            e[i] = alpha[i].get<int>();
            sum += e[i];
        }
        if (sum != d) throw InvalidInput("exponent vector does not have total degree " + std::to_string(d));
        mpq_class re = term.contains("re") ? rational_from_json(term["re"]) : mpq_class(0);
        mpq_class im = term.contains("im") ? rational_from_json(term["im"]) : mpq_class(0);
        f.coeff(e) += GaussianRational(re, im);
    }
    return f;
}

json report_to_json(const CohomologyReport& r) {
    return {{"d", r.d}, {"cols", r.cols}, {"rows", r.rows}, {"rank", r.rank}, {"h0", r.h0}, {"h1", r.h1}};
}

json configuration_to_json(const Configuration& c) {
    json lines = json::array(), fat = json::array(), simple = json::array();
    for (const auto& l : c.lines) lines.push_back(line_to_json(l));
    for (const auto& p : c.fat_points) fat.push_back(point_to_json(p));
    for (const auto& p : c.simple_points) simple.push_back(point_to_json(p));
    return {{"lines", lines}, {"fat_points", fat}, {"simple_points", simple}};
}

Configuration configuration_from_json(const json& j) {
    Configuration c;
    if (j.contains("lines"))
        for (const auto& l : j["lines"]) c.lines.push_back(line_from_json(l));
    if (j.contains("fat_points"))
        for (const auto& p : j["fat_points"]) c.fat_points.push_back(point_from_json(p));
    if (j.contains("simple_points"))
        for (const auto& p : j["simple_points"]) c.simple_points.push_back(point_from_json(p));
    c.validate();
    return c;
}

json line_search_to_json(const LineSearchReport& r) {
    json lines = json::array();
    for (const auto& l : r.lines) {
        json item = plucker_to_json(l.plucker);
        item["residual"] = l.residual;
        item["is_twistor"] = l.is_twistor;
        item["twistor_margin"] = l.twistor_margin;
        item["exactly_confirmed"] = l.exact.has_value();
        if (l.exact) {
            item["exact_line"] = line_to_json(*l.exact);
            item["exact_twistor"] = l.exact_twistor;
        }
        lines.push_back(std::move(item));
    }
    return {{"lines", lines},
            {"count", r.lines.size()},
            {"starts", r.starts},
            {"converged_starts", r.converged},
            {"positive_dimensional", r.positive_dimensional},
            {"accept_tol", r.options.accept_tol},
            {"dedup_tol", r.options.dedup_tol},
            {"starts_per_chart", r.options.starts_per_chart},
            {"seed", r.options.seed}};
}

json surface_report_to_json(const SurfaceReport& r, const SurfaceOptions& opts) {
    json out;
    out["degree"] = r.degree;
    out["seed"] = opts.seed;
    if (opts.run_lines) {
        out["line_search"] = line_search_to_json(r.line_search);
        out["n_twistor"] = r.n_twistor;
        out["twistor_bound_violated"] = r.twistor_bound_violated;
    }
    out["input_lines_contained"] = r.input_lines_contained;
    if (r.smooth_along_input_lines) out["smooth_along_input_lines"] = *r.smooth_along_input_lines;
    if (r.singularity) {
        json cands = json::array();
        for (const auto& c : r.singularity->candidates)
            cands.push_back({{"point", point_to_json(c.point)}, {"residual", c.residual}});
        out["singularity_probe"] = {{"candidates", cands},
                                    {"starts", r.singularity->starts},
                                    {"tol", r.singularity->tol},
                                    {"summary", r.singularity->summary()}};
    }
    if (r.irreducibility) {
        json plane = json::array();
        for (const auto& p : r.irreducibility->plane) plane.push_back(point_to_json(p));
        out["irreducibility"] = {
            {"verdict", r.irreducibility->verdict == IrreducibilityResult::Verdict::Certified ? "Certified"
                                                                                                : "Inconclusive"},
            {"planes_tried", r.irreducibility->planes_tried},
            {"plane", plane},
            {"reason", r.irreducibility->reason}};
    }
    return out;
}

}  // namespace twistor::io
