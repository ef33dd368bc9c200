#include "hachow/hachow.h"

#include "hachow/errors.hpp"
#include "hachow/pairing.hpp"

#include <json.hpp>

#include <cmath>
#include <cstring>
#include <new>
#include <sstream>

using json = nlohmann::json;
using namespace hachow;

struct hachow_config {
    FieldSpec field = FieldSpec::gaussian();
    long bits = 256;
    double tol = 1e-6;
    int max_depth = 28;
    std::uint64_t factor_bound = kDefaultFactorBound;
    std::string primes_text;
    std::vector<GaussianInteger> primes;
    long height = 8;
    long denom_bound = 144;

    RegulatorOptions regulator() const {
        RegulatorOptions o;
        o.precision.bits = bits;
        o.quadrature.tol = tol;
        o.quadrature.max_depth = max_depth;
        return o;
    }
    PairingOptions pairing() const {
        PairingOptions o;
        o.regulator = regulator();
        o.decompose.primes = primes;
        o.decompose.height = height;
        o.decompose.factor_bound = factor_bound;
        o.denom_bound = denom_bound;
        return o;
    }
    json echo() const {
        return {{"field", field.name()},
                {"precision", bits},
                {"tol", tol},
                {"max_depth", max_depth},
                {"factor_bound", factor_bound},
                {"primes", primes_text.empty() ? json("default") : json(primes_text)},
                {"height", height},
                {"denom_bound", denom_bound}};
    }
};

struct hachow_cycle {
    FormalCycle z;
};

namespace {

thread_local std::string last_error;
thread_local long last_position = -1;

hachow_status status_of(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidArgument: return HACHOW_E_INVALID_ARGUMENT;
    case ErrorKind::Parse: return HACHOW_E_PARSE;
    case ErrorKind::Admissibility: return HACHOW_E_ADMISSIBILITY;
    case ErrorKind::UnsupportedShape: return HACHOW_E_UNSUPPORTED_SHAPE;
    case ErrorKind::FactorBound: return HACHOW_E_FACTOR_BOUND;
    case ErrorKind::NoDecomposition: return HACHOW_E_NO_DECOMPOSITION;
    case ErrorKind::Quadrature: return HACHOW_E_QUADRATURE;
    case ErrorKind::Domain: return HACHOW_E_DOMAIN;
    case ErrorKind::Internal: return HACHOW_E_INTERNAL;
    }
    return HACHOW_E_INTERNAL;
}

hachow_status fail(hachow_status s, const std::string& msg) {
    last_error = msg;
    return s;
}

template <class F>
hachow_status guarded(F&& f) {
    last_error.clear();
    last_position = -1;
    try {
        return f();
    } catch (const ParseError& e) {
        last_position = static_cast<long>(e.position());
        return fail(HACHOW_E_PARSE, e.what());
    } catch (const Error& e) {
        return fail(status_of(e.kind()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(HACHOW_E_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(HACHOW_E_INTERNAL, e.what());
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hachow_status emit(const json& doc, char** out, hachow_status s = HACHOW_OK) {
    *out = dup(doc.dump(2) + "\n");
    return s;
}

#define REQUIRE_ARG(x) \
    if (!(x)) return fail(HACHOW_E_INVALID_ARGUMENT, "null argument: " #x)

double closed_form_error(const hachow_config& c) {
    PrecisionPolicy p;
    p.bits = c.bits;
    return std::pow(10.0, -p.claimed_digits());
}

int digits_for(const hachow_config& c, Provenance prov) {
    if (prov == Provenance::Numeric) return 15;
    PrecisionPolicy p;
    p.bits = c.bits;
    return p.claimed_digits();
}

std::string scalar_string(const DeligneClass& v, int k, int digits) {
    if (v.scalars.at(k).is_zero()) return "0";
    return v.value_string(k, digits);
}

json class_json(const hachow_config& c, const DeligneClass& v, Provenance prov, double error) {
    json j;
    j["twist"] = v.twist;
    j["unit"] = v.twist == 1 ? "1" : "(2*pi)^" + std::to_string(v.twist - 1);
    j["provenance"] = provenance_name(prov);
    int digits = digits_for(c, prov);
    for (int k = 0; k < static_cast<int>(v.scalars.size()); ++k)
        j[FieldSpec::embedding_name(k)] = scalar_string(v, k, digits);
    if (prov == Provenance::ExactZero) {
        j["exact"] = true;
        j["error"] = 0.0;
    } else {
        j["error"] = prov == Provenance::Numeric ? error : std::max(error, closed_form_error(c));
    }
    return j;
}

json cycle_json(const FormalCycle& z) {
    json terms = json::array();
    for (const auto& [g, m] : z.terms()) {
        json t = {{"generator", g.to_string()}, {"multiplicity", m}};
        if (g.arity == 0) {
            json pt = json::array();
            for (const auto& v : g.point_coordinates()) pt.push_back(v.to_string());
            t["point"] = pt;
        }
        terms.push_back(t);
    }
    return {{"cycle", z.is_zero() ? "0" : z.to_string()},
            {"dimension", z.dimension()},
            {"exact", true},
            {"is_zero", z.is_zero()},
            {"terms", terms}};
}

json report(const std::string& command, const hachow_config& c, json inputs) {
    return {{"command", command}, {"config", c.echo()}, {"inputs", std::move(inputs)}};
}

json decomposition_json(const SteinbergDecomposition& d, const std::vector<GaussianInteger>& primes, long height) {
    json atoms = json::array();
    for (const auto& a : d.atoms)
        atoms.push_back({{"gamma", a.gamma.to_string()},
                         {"one_minus_gamma", (FieldElement(1, 0, a.gamma.d()) - a.gamma).to_string()},
                         {"coefficient", a.coefficient.get_str()}});
    json s = json::array();
    for (const auto& p : primes) s.push_back(p.to_string());
    return {{"alpha", d.alpha.to_string()},
            {"beta", d.beta.to_string()},
            {"N", d.denominator.get_str()},
            {"atoms", atoms},
            {"candidates", d.candidates},
            {"rank", d.rank},
            {"trivial", d.trivial},
            {"primes", s},
            {"height", height},
            {"certificate", d.certificate()},
            {"verified", d.verify()},
            {"exact", true}};
}

json pairing_json(const hachow_config& c, const PairingResult& r) {
    json j;
    j["p"] = r.p;
    j["q"] = r.q;
    double err = r.provenance == Provenance::Numeric ? r.error : 0.0;
    j["raw"] = class_json(c, r.raw, r.provenance, err);
    json gens = json::array();
    for (const auto& g : r.generators) gens.push_back(class_json(c, g, Provenance::ClosedForm, 0));
    j["generators"] = gens;
    json mult = json::array();
    for (const auto& q : r.reduction.multiples) mult.push_back(q.get_str());
    j["reduction"] = {{"multiples", mult},
                      {"residue", class_json(c, r.reduction.residue, r.provenance, err)},
                      {"residue_norm", r.reduction.residue_norm}};
    j["certificate"] = r.certificate;
    if (r.decomposition) {
        std::vector<GaussianInteger> s = c.primes;
        if (s.empty()) s = default_primes(r.decomposition->alpha, r.decomposition->beta, c.factor_bound);
        j["decomposition"] = decomposition_json(*r.decomposition, s, c.height);
    }
    return j;
}

FieldElement parse_element(const hachow_config& c, const char* text, const char* what) {
    if (!text) throw invalid_argument(std::string("missing ") + what);
    return FieldElement::parse(text, c.field);
}

}  // namespace

extern "C" {

const char* hachow_version(void) { return "0.1.0"; }

const char* hachow_status_name(hachow_status s) {
    switch (s) {
    case HACHOW_OK: return "ok";
    case HACHOW_E_INVALID_ARGUMENT: return "invalid-argument";
    case HACHOW_E_PARSE: return "parse";
    case HACHOW_E_ADMISSIBILITY: return "admissibility";
    case HACHOW_E_UNSUPPORTED_SHAPE: return "unsupported-shape";
    case HACHOW_E_FACTOR_BOUND: return "factor-bound";
    case HACHOW_E_NO_DECOMPOSITION: return "no-decomposition";
    case HACHOW_E_QUADRATURE: return "quadrature";
    case HACHOW_E_DOMAIN: return "domain";
    case HACHOW_E_INTERNAL: return "internal";
    case HACHOW_E_CHECK_FAILED: return "check-failed";
    }
    return "unknown";
}

const char* hachow_last_error(void) { return last_error.c_str(); }
long hachow_last_error_position(void) { return last_position; }

void hachow_string_free(char* s) { std::free(s); }

hachow_config* hachow_config_new(void) { return new (std::nothrow) hachow_config(); }
void hachow_config_free(hachow_config* cfg) { delete cfg; }

hachow_status hachow_config_set_field(hachow_config* cfg, const char* name) {
    return guarded([&] {
        REQUIRE_ARG(cfg && name);
        cfg->field = FieldSpec::parse(name);
        return HACHOW_OK;
    });
}

hachow_status hachow_config_set_precision(hachow_config* cfg, long bits) {
    return guarded([&] {
        REQUIRE_ARG(cfg);
        if (bits < 64 || bits > 1 << 16) return fail(HACHOW_E_INVALID_ARGUMENT, "precision must lie in [64, 65536] bits");
        cfg->bits = bits;
        return HACHOW_OK;
    });
}

hachow_status hachow_config_set_tolerance(hachow_config* cfg, double tol) {
    return guarded([&] {
        REQUIRE_ARG(cfg);
        if (!(tol > 0) || !std::isfinite(tol)) return fail(HACHOW_E_INVALID_ARGUMENT, "tolerance must be positive");
        cfg->tol = tol;
        return HACHOW_OK;
    });
}

hachow_status hachow_config_set_max_depth(hachow_config* cfg, int depth) {
    return guarded([&] {
        REQUIRE_ARG(cfg);
        if (depth < 1 || depth > 60) return fail(HACHOW_E_INVALID_ARGUMENT, "max depth must lie in [1, 60]");
        cfg->max_depth = depth;
        return HACHOW_OK;
    });
}

hachow_status hachow_config_set_factor_bound(hachow_config* cfg, uint64_t bound) {
    return guarded([&] {
        REQUIRE_ARG(cfg);
        if (bound < 2) return fail(HACHOW_E_INVALID_ARGUMENT, "factor bound must be at least 2");
        cfg->factor_bound = bound;
        return HACHOW_OK;
    });
}

hachow_status hachow_config_set_primes(hachow_config* cfg, const char* primes) {
    return guarded([&] {
        REQUIRE_ARG(cfg && primes);
        std::vector<FieldElement> xs;
        std::stringstream in(primes);
        std::string item;
        while (std::getline(in, item, ','))
            if (item.find_first_not_of(" \t") != std::string::npos) xs.push_back(FieldElement::parse(item, cfg->field));
        cfg->primes = canonical_primes(xs);
        cfg->primes_text = primes;
        return HACHOW_OK;
    });
}

hachow_status hachow_config_set_height(hachow_config* cfg, long height) {
    return guarded([&] {
        REQUIRE_ARG(cfg);
        if (height < 1) return fail(HACHOW_E_INVALID_ARGUMENT, "height must be positive");
        cfg->height = height;
        return HACHOW_OK;
    });
}

hachow_status hachow_config_set_denom_bound(hachow_config* cfg, long bound) {
    return guarded([&] {
        REQUIRE_ARG(cfg);
        if (bound < 1) return fail(HACHOW_E_INVALID_ARGUMENT, "denominator bound must be positive");
        cfg->denom_bound = bound;
        return HACHOW_OK;
    });
}

hachow_status hachow_cycle_parse(const hachow_config* cfg, const char* text, hachow_cycle** out) {
    return guarded([&] {
        REQUIRE_ARG(cfg && text && out);
        *out = nullptr;
        *out = new hachow_cycle{FormalCycle::parse(text, cfg->field)};
        return HACHOW_OK;
    });
}

void hachow_cycle_free(hachow_cycle* z) { delete z; }

hachow_status hachow_cycle_to_string(const hachow_cycle* z, char** out) {
    return guarded([&] {
        REQUIRE_ARG(z && out);
        *out = dup(z->z.is_zero() ? "0" : z->z.to_string());
        return HACHOW_OK;
    });
}

hachow_status hachow_cycle_boundary(const hachow_cycle* z, hachow_cycle** out) {
    return guarded([&] {
        REQUIRE_ARG(z && out);
        *out = nullptr;
        *out = new hachow_cycle{boundary(z->z)};
        return HACHOW_OK;
    });
}

int hachow_cycle_dimension(const hachow_cycle* z) { return z ? z->z.dimension() : -1; }
int hachow_cycle_is_zero(const hachow_cycle* z) { return z ? z->z.is_zero() : 0; }

hachow_status hachow_report_boundary(const hachow_config* cfg, const hachow_cycle* z, char** json_out) {
    return guarded([&] {
        REQUIRE_ARG(cfg && z && json_out);
        *json_out = nullptr;
        json doc = report("boundary", *cfg, {{"cycle", z->z.to_string()}});
        doc["result"] = cycle_json(boundary(z->z));
        return emit(doc, json_out);
    });
}

hachow_status hachow_report_regulator(const hachow_config* cfg, const hachow_cycle* z, int force_numeric,
                                      char** json_out) {
    return guarded([&] {
        REQUIRE_ARG(cfg && z && json_out);
        *json_out = nullptr;
        json doc = report("regulator", *cfg, {{"cycle", z->z.to_string()}, {"numeric", force_numeric != 0}});
        RegulatorValue v = force_numeric && z->z.dimension() == 3 && z->z.codimension() == 2
                               ? regulator_curve_numeric(z->z, cfg->regulator())
                               : regulator(z->z, cfg->regulator());
        doc["result"] = class_json(*cfg, v.value, v.provenance, v.error);
        return emit(doc, json_out);
    });
}

hachow_status hachow_report_polylog(const hachow_config* cfg, const char* function, int order, const char* z,
                                    char** json_out) {
    return guarded([&] {
        REQUIRE_ARG(cfg && function && z && json_out);
        *json_out = nullptr;
        std::string fn = function;
        FieldElement x = FieldElement::parse(z, cfg->field);
        PrecisionPolicy pol;
        pol.bits = cfg->bits;
        Complex arg = x.embed(0, pol.working_bits());
        Complex value(pol.bits);
        if (fn == "li") {
            value = li(order, arg, pol);
        } else if (fn == "bloch-wigner") {
            order = 2;
            value = Complex(bloch_wigner(arg, pol));
        } else if (fn == "trilog") {
            order = 3;
            value = Complex(trilog_sv(arg, pol));
        } else {
            return fail(HACHOW_E_INVALID_ARGUMENT, "unknown function '" + fn + "' (li, bloch-wigner, trilog)");
        }
        int digits = pol.claimed_digits();
        json doc = report("polylog", *cfg, {{"function", fn}, {"order", order}, {"z", x.to_string()}});
        doc["result"] = {{"re", value.re.to_string(digits)},
                         {"im", value.im.to_string(digits)},
                         {"claimed_digits", digits},
                         {"embedding", FieldSpec::embedding_name(0)},
                         {"provenance", "closed-form"},
                         {"error", closed_form_error(*cfg)}};
        return emit(doc, json_out);
    });
}

hachow_status hachow_report_decompose(const hachow_config* cfg, const char* alpha, const char* beta, char** json_out) {
    return guarded([&] {
        REQUIRE_ARG(cfg && json_out);
        *json_out = nullptr;
        FieldElement a = parse_element(*cfg, alpha, "alpha"), b = parse_element(*cfg, beta, "beta");
        json doc = report("decompose", *cfg, {{"alpha", a.to_string()}, {"beta", b.to_string()}});
        PairingOptions o = cfg->pairing();
        SteinbergDecomposition d = decompose(a, b, o.decompose);
        std::vector<GaussianInteger> s = cfg->primes.empty() ? default_primes(a, b, cfg->factor_bound) : cfg->primes;
        doc["result"] = decomposition_json(d, s, cfg->height);
        return emit(doc, json_out);
    });
}

hachow_status hachow_report_pair(const hachow_config* cfg, int p, int q, const char* alpha, const char* beta,
                                 char** json_out) {
    return guarded([&] {
        REQUIRE_ARG(cfg && json_out);
        *json_out = nullptr;
        if (p == 1 && q == 1) {
            FieldElement a = parse_element(*cfg, alpha, "alpha"), b = parse_element(*cfg, beta, "beta");
            json doc = report("pair", *cfg, {{"p", p}, {"q", q}, {"alpha", a.to_string()}, {"beta", b.to_string()}});
            doc["result"] = pairing_json(*cfg, pair_11(a, b, cfg->pairing()));
            return emit(doc, json_out);
        }
        if (p == 1 && q == 2) {
            if (cfg->field.d != 1) return fail(HACHOW_E_INVALID_ARGUMENT, "the standard (1, 2) pairing lives over Q(i)");
            json doc = report("pair", *cfg, {{"p", p}, {"q", q}, {"alpha", "i"}, {"cycle", "Z_i"}});
            doc["result"] = pairing_json(*cfg, pair_1_2_standard(cfg->pairing()));
            return emit(doc, json_out);
        }
        return fail(HACHOW_E_UNSUPPORTED_SHAPE, "pairings are implemented for (p, q) = (1, 1) and (1, 2)");
    });
}

hachow_status hachow_report_ranks(const hachow_config* cfg, int p, int n, char** json_out) {
    return guarded([&] {
        REQUIRE_ARG(cfg && json_out);
        *json_out = nullptr;
        GroupShape g = group_shape(p, n, cfg->field);
        json doc = report("ranks", *cfg, {{"p", p}, {"n", n}});
        doc["result"] = {{"field", g.field},
                         {"chow", g.chow},
                         {"chow_rank", g.chow_rank < 0 ? json("infinite") : json(g.chow_rank)},
                         {"deligne", g.deligne},
                         {"deligne_dim", g.deligne_dim},
                         {"arithmetic", g.arithmetic},
                         {"arithmetic_tw", g.arithmetic_tw},
                         {"exact", true}};
        return emit(doc, json_out);
    });
}

hachow_status hachow_report_verify(const hachow_config* cfg, const char* check, const char* argument, char** json_out) {
    return guarded([&] {
        REQUIRE_ARG(cfg && check && json_out);
        *json_out = nullptr;
        std::string what = check;
        std::string arg = argument ? argument : "";
        json doc = report("verify", *cfg, {{"check", what}, {"argument", arg}});
        bool pass = false;
        if (what == "lemma19") {
            const double limit = 1e-6;
            FormalCycle curve = FormalCycle::parse(arg, cfg->field);
            Lemma19Report r = lemma19_check(curve, cfg->regulator());
            pass = r.total <= limit && r.residue_check <= limit;
            doc["result"] = {{"total", r.total},
                             {"residue_check", r.residue_check},
                             {"error", r.error},
                             {"limit", limit},
                             {"provenance", "numeric"}};
        } else if (what == "boundary-squared") {
            FormalCycle z = FormalCycle::parse(arg, cfg->field);
            FormalCycle dz = boundary(z), ddz = boundary(dz);
            pass = ddz.is_zero();
            doc["result"] = {{"boundary", cycle_json(dz)}, {"boundary_squared", cycle_json(ddz)}, {"exact", true}};
        } else if (what == "totaro-numeric") {
            const double limit = 1e-4;
            FieldElement a = FieldElement::parse(arg, cfg->field);
            RegulatorOptions o = cfg->regulator();
            RegulatorValue closed = regulator_totaro(a, o), numeric = regulator_curve_numeric(cycles::totaro(a), o);
            double gap = closed.value.distance(numeric.value).to_double();
            pass = gap <= limit;
            doc["result"] = {{"closed_form", class_json(*cfg, closed.value, closed.provenance, closed.error)},
                             {"numeric", class_json(*cfg, numeric.value, numeric.provenance, numeric.error)},
                             {"difference", gap},
                             {"limit", limit}};
        } else if (what == "weight3") {
            const double limit = 1e-10;
            PairingResult r = pair_1_2_standard(cfg->pairing());
            mpfr_prec_t bits = cfg->bits;
            Real pi = Real::pi(bits);
            Real expect = -(Real::zeta(3, bits) * 3L) / (pi * pi * 16L);
            double gap = abs(r.raw.value(0).re - expect).to_double();
            pass = gap <= limit;
            doc["result"] = {{"pairing", pairing_json(*cfg, r)},
                             {"zeta3_form", expect.to_string(digits_for(*cfg, Provenance::ClosedForm))},
                             {"difference", gap},
                             {"xi_numeric", r.error},
                             {"limit", limit}};
        } else {
            return fail(HACHOW_E_INVALID_ARGUMENT,
                        "unknown check '" + what + "' (lemma19, boundary-squared, totaro-numeric, weight3)");
        }
        doc["result"]["pass"] = pass;
        if (!pass) {
            last_error = "check '" + what + "' failed";
            return emit(doc, json_out, HACHOW_E_CHECK_FAILED);
        }
        return emit(doc, json_out);
    });
}

}  // extern "C"
