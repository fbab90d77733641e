#include "tder/commands.hpp"

#include <sstream>

#include "tder/codes.hpp"
#include "tder/dihedral_forms.hpp"
#include "tder/golden.hpp"
#include "tder/twisted_conjugacy.hpp"

namespace tder {

namespace {

using nlohmann::json;

struct Rejected {
  Rejection r;
};

template <class T>
T take(Expected<T> e) {
  if (!e) throw Rejected{e.rejection()};
  return std::move(*e);
}

CommandResult rejected(const Rejection& r, json extra = json::object()) {
  extra["rejected"] = {{"reason", r.reason}, {"detail", r.detail}};
  return {1, extra, "rejected: " + r.reason + (r.detail.empty() ? "" : " (" + r.detail + ")") + "\n"};
}

template <class Fn>
CommandResult run(Fn&& f) {
  try {
    return f();
  } catch (const Rejected& r) {
    return rejected(r.r);
  }
}

Endomorphism endo(const JobSpec& s, const std::map<std::string, std::string>& images) {
  if (images.empty()) return identity_endomorphism(s.group);
  return take(endo_from_images(s.group, images));
}

Endomorphism sigma_of(const JobSpec& s) { return endo(s, s.sigma); }
Endomorphism tau_of(const JobSpec& s) { return s.tau ? endo(s, *s.tau) : sigma_of(s); }

json endo_json(const Endomorphism& e) {
  json j{{"images", e.describe()}, {"identity", e.is_identity()}};
  if (e.dihedral_family() != DihedralFamily::none) {
    j["family"] = to_string(e.dihedral_family());
    if (auto st = e.dihedral_st()) j["s"] = st->first, j["t"] = st->second;
  }
  return j;
}

std::string endo_text(const Endomorphism& e) {
  std::string s = e.describe();
  if (e.dihedral_family() != DihedralFamily::none) {
    s += " [" + to_string(e.dihedral_family());
    if (auto st = e.dihedral_st()) s += ", s=" + std::to_string(st->first) + ", t=" + std::to_string(st->second);
    s += "]";
  }
  return s;
}

bool has_derivation(const JobSpec& s) { return s.derivation || s.cyclic_seed; }

template <ExactField F>
TwistedDerivation<F> build_derivation(const JobSpec& s, const F& field) {
  const auto sigma = sigma_of(s);
  if (s.cyclic_seed) {
    if (s.tau && !(tau_of(s) == sigma)) throw SpecError("cyclic_seed needs tau = sigma");
    return take(cyclic_power_derivation(sigma, parse_element(s.group, field, *s.cyclic_seed)));
  }
  if (!s.derivation) throw SpecError("job spec has no derivation");
  const auto& G = *s.group;
  GeneratorMap<F> f{s.group, std::vector<GroupRingElement<F>>(G.generator_count(), GroupRingElement<F>(s.group, field))};
  for (const auto& [name, text] : *s.derivation) {
    const auto gi = G.generator_index(name);
    if (!gi) throw SpecError("derivation names unknown generator '" + name + "'");
    f.images[*gi] = parse_element(s.group, field, text);
  }
  return take(extend_from_generators(f, sigma, tau_of(s), field));
}

template <ExactField F>
std::string derivation_text(const JobSpec& s) {
  if (s.cyclic_seed) return *s.cyclic_seed;
  std::string out;
  for (const auto& [k, v] : *s.derivation) out += (out.empty() ? "" : "; ") + k + " = " + v;
  return out;
}

template <ExactField F>
json generator_images(const TwistedDerivation<F>& d) {
  json j = json::object();
  const auto& G = d.group();
  for (std::size_t i = 0; i < G.generator_count(); ++i)
    j[G.generator_names()[i]] = format_element(d(G.generator(i)));
  return j;
}

template <class Fn>
auto with_field(const JobSpec& s, Fn&& f) {
  return std::visit([&](const auto& field) { return f(field); }, s.field);
}

PrimeField prime_field(const JobSpec& s) {
  if (auto p = std::get_if<PrimeField>(&s.field)) return *p;
  throw SpecError("codes need a prime field, got " + field_name(s.field));
}

std::string fmt_set(const FiniteGroup& G, const std::vector<Element>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + G.name(xs[i]);
  return s + "}";
}

std::vector<std::string> names(const FiniteGroup& G, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (Element x : xs) out.push_back(G.name(x));
  return out;
}

std::vector<Element> resolve(const FiniteGroup& G, const std::vector<std::string>& xs) {
  std::vector<Element> out;
  for (const auto& x : xs) out.push_back(G.parse_element(x));
  return out;
}

std::string report_text(const CodeReport& r) {
  std::string s = to_string(r.params) + (r.lcd ? " LCD" : " non-LCD");
  if (r.self_orthogonal) s += " self-orthogonal";
  return s + ", dual " + to_string(r.dual);
}

}  // namespace

void apply_overrides(JobSpec& spec, const Overrides& o) {
  if (o.field) spec.field = parse_field(*o.field);
  if (o.sigma) spec.sigma = parse_image_list(*o.sigma);
  if (o.tau) spec.tau = parse_image_list(*o.tau);
  if (o.subset) spec.subsets = {parse_subset(*o.subset)};
}

CommandResult cmd_validate(const JobSpec& s) {
  const auto& G = *s.group;
  json j{{"group", G.description()}, {"order", G.order()}, {"field", field_name(s.field)},
         {"generators", G.generator_names()}};
  std::ostringstream t;
  t << "group " << G.description() << " (order " << G.order() << ")\n";
  t << "field " << field_name(s.field) << "\n";

  auto e = s.sigma.empty() ? Expected<Endomorphism>(identity_endomorphism(s.group))
                           : endo_from_images(s.group, s.sigma);
  if (!e) {
    j["sigma"] = {{"status", "rejected"}, {"reason", e.rejection().reason}, {"detail", e.rejection().detail}};
    t << "sigma rejected: " << e.rejection().reason << " (" << e.rejection().detail << ")\n";
    return {1, j, t.str()};
  }
  j["sigma"] = endo_json(*e);
  t << "sigma " << endo_text(*e) << "\n";
  if (s.tau) {
    auto te = endo_from_images(s.group, *s.tau);
    if (!te) {
      j["tau"] = {{"status", "rejected"}, {"reason", te.rejection().reason}, {"detail", te.rejection().detail}};
      t << "tau rejected: " << te.rejection().reason << " (" << te.rejection().detail << ")\n";
      return {1, j, t.str()};
    }
    j["tau"] = endo_json(*te);
    t << "tau " << endo_text(*te) << "\n";
  }
  if (has_derivation(s)) {
    try {
      with_field(s, [&](const auto& f) {
        build_derivation(s, f);
        return 0;
      });
      j["derivation"] = {{"status", "accepted"}};
      t << "derivation accepted\n";
    } catch (const Rejected& r) {
      j["derivation"] = {{"status", "rejected"}, {"reason", r.r.reason}, {"detail", r.r.detail}};
      t << "derivation rejected: " << r.r.reason << " (" << r.r.detail << ")\n";
      return {1, j, t.str()};
    }
  }
  for (const auto& sub : s.subsets) resolve(G, sub);
  t << "ok\n";
  return {0, j, t.str()};
}

CommandResult cmd_derive(const JobSpec& s) {
  return run([&] {
    return with_field(s, [&](const auto& f) {
      const auto d = build_derivation(s, f);
      const auto& G = d.group();
      json table = json::array();
      std::ostringstream t;
      t << "derivation on " << field_name(s.field) << G.description() << ", sigma " << d.sigma().describe()
        << ", tau " << d.tau().describe() << "\n";
      for (Element g = 0; g < G.order(); ++g) {
        const auto v = format_element(d(g));
        table.push_back({{"element", G.name(g)}, {"value", v}});
        t << "D(" << G.name(g) << ") = " << v << "\n";
      }
      json j{{"group", G.description()},
             {"field", field_name(s.field)},
             {"sigma", endo_json(d.sigma())},
             {"tau", endo_json(d.tau())},
             {"provenance", to_string(d.provenance())},
             {"table", table}};
      return CommandResult{0, j, t.str()};
    });
  });
}

CommandResult cmd_space(const JobSpec& s) {
  return run([&] {
    return with_field(s, [&](const auto& f) {
      const auto sigma = sigma_of(s);
      const auto tau = tau_of(s);
      const auto sp = derivation_space(sigma, tau, f);
      std::ostringstream t;
      t << "derivation space of " << field_name(s.field) << s.group->description() << ", sigma "
        << endo_text(sigma) << ", tau " << endo_text(tau) << "\n";
      t << "dimension " << sp.dimension << "\n";
      json basis = json::array();
      for (std::size_t i = 0; i < sp.basis.size(); ++i) {
        const auto imgs = generator_images(sp.basis[i]);
        basis.push_back(imgs);
        t << "  D" << i + 1 << ":";
        bool first = true;
        for (const auto& gen : s.group->generator_names()) {
          t << (first ? " " : ", ") << gen << " -> " << imgs[gen].template get<std::string>();
          first = false;
        }
        t << "\n";
      }
      json j{{"group", s.group->description()}, {"field", field_name(s.field)}, {"sigma", endo_json(sigma)},
             {"tau", endo_json(tau)}, {"dimension", sp.dimension}, {"basis", basis}};
      return CommandResult{0, j, t.str()};
    });
  });
}

CommandResult cmd_classes(const JobSpec& s) {
  return run([&] {
    const auto sigma = sigma_of(s);
    const auto tau = tau_of(s);
    const auto p = twisted_classes(sigma, tau);
    const auto& G = *s.group;
    std::ostringstream t;
    t << "twisted classes of " << G.description() << ", sigma " << endo_text(sigma) << ", tau " << endo_text(tau)
      << "\n";
    t << "classes " << p.count() << ", singletons " << p.singleton_count << "\n";
    json cls = json::array();
    for (std::size_t i = 0; i < p.count(); ++i) {
      cls.push_back({{"representative", G.name(p.representatives[i])}, {"members", names(G, p.classes[i])}});
      t << "  " << fmt_set(G, p.classes[i]) << "\n";
    }
    const auto z = twisted_center_group(sigma, tau);
    t << "twisted center " << fmt_set(G, z) << "\n";
    json j{{"group", G.description()}, {"sigma", endo_json(sigma)}, {"tau", endo_json(tau)},
           {"count", p.count()},       {"singletons", p.singleton_count}, {"classes", cls},
           {"center", names(G, z)}};
    return CommandResult{0, j, t.str()};
  });
}

CommandResult cmd_inner(const JobSpec& s) {
  return run([&] {
    return with_field(s, [&](const auto& f) {
      using F = std::decay_t<decltype(f)>;
      const auto sigma = sigma_of(s);
      const auto tau = tau_of(s);
      const auto& G = *s.group;
      std::ostringstream t;
      json j{{"group", G.description()}, {"field", field_name(s.field)}, {"sigma", endo_json(sigma)},
             {"tau", endo_json(tau)}};
      if (has_derivation(s)) {
        const auto d = build_derivation(s, f);
        const auto w = is_inner(d);
        j["inner"] = w.has_value();
        if (w) {
          j["witness"] = format_element(*w);
          t << "inner, witness beta = " << format_element(*w) << "\n";
        } else {
          t << "outer: no beta with D = D_beta\n";
        }
        if (f.characteristic() == 0 || G.order() % f.characteristic() != 0) {
          const auto gamma = averaging_witness(d);
          j["averaging_witness"] = format_element(gamma);
          t << "averaging witness gamma = " << format_element(gamma) << "\n";
        }
        return CommandResult{0, j, t.str()};
      }
      if (s.beta) {
        const auto d = inner_derivation(parse_element(s.group, f, *s.beta), sigma, tau);
        json table = json::array();
        for (Element g = 0; g < G.order(); ++g) {
          table.push_back({{"element", G.name(g)}, {"value", format_element(d(g))}});
          t << "D(" << G.name(g) << ") = " << format_element(d(g)) << "\n";
        }
        j["beta"] = *s.beta;
        j["table"] = table;
        return CommandResult{0, j, t.str()};
      }
      const auto p = twisted_classes(sigma, tau);
      const auto basis = inner_basis(sigma, tau, f);
      std::vector<std::string> used;
      for (const auto& d : basis) used.push_back(format_element(*d.witness()));
      const auto rank = derivation_rank<F>(basis, s.group, f);
      j["dimension"] = basis.size();
      j["rank"] = rank;
      j["classes"] = p.count();
      j["basis_witnesses"] = used;
      t << "inner derivations: dimension " << basis.size() << " = |G| - r = " << G.order() << " - " << p.count()
        << " (rank " << rank << ")\n";
      t << "basis D_g for g in " << fmt_set(G, resolve(G, used)) << "\n";
      return CommandResult{0, j, t.str()};
    });
  });
}

CommandResult cmd_predict(const JobSpec& s, bool check) {
  return run([&] {
    const auto sigma = sigma_of(s);
    if (s.group->family() != GroupFamily::dihedral) throw SpecError("predict needs a dihedral group");
    const auto ch = field_characteristic(s.field);
    const auto pr = take(predict(sigma, ch));
    const auto& G = *s.group;
    std::ostringstream t;
    t << G.description() << " over " << field_name(s.field) << ", sigma " << endo_text(sigma) << "\n";
    t << "m = " << pr.params.m << ", d = " << pr.params.d << ", j0 = " << pr.params.j0 << "\n";
    t << "dim derivations " << pr.dim_derivations.value << " (" << pr.dim_derivations.label << ")\n";
    t << "classes " << pr.class_count << "\n";
    json cls = json::array();
    for (const auto& c : pr.classes) {
      cls.push_back({{"description", c.description}, {"members", names(G, c.members)}});
      t << "  " << c.description << " = " << fmt_set(G, c.members) << "\n";
    }
    t << "dim inner " << pr.dim_inner << "\n";
    t << "outer derivations " << (pr.outer_nonzero ? "exist" : "none") << "\n";
    json j{{"group", G.description()},
           {"field", field_name(s.field)},
           {"sigma", endo_json(sigma)},
           {"params", {{"n", pr.params.n}, {"s", pr.params.s}, {"t", pr.params.t}, {"m", pr.params.m},
                       {"d", pr.params.d}, {"j0", pr.params.j0}}},
           {"dim_derivations", pr.dim_derivations.value},
           {"case", pr.dim_derivations.label},
           {"class_count", pr.class_count},
           {"classes", cls},
           {"dim_inner", pr.dim_inner},
           {"outer_nonzero", pr.outer_nonzero}};
    int code = 0;
    if (check) {
      with_field(s, [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        const auto dim = derivation_space(sigma, sigma, f).dimension;
        const auto classes = twisted_classes(sigma, sigma).count();
        const auto inner = derivation_rank<F>(inner_basis(sigma, sigma, f), s.group, f);
        const bool ok = dim == pr.dim_derivations.value && classes == pr.class_count && inner == pr.dim_inner &&
                        (dim > inner) == pr.outer_nonzero;
        j["computed"] = {{"dim_derivations", dim}, {"class_count", classes}, {"dim_inner", inner}, {"agree", ok}};
        t << "computed: dim " << dim << ", classes " << classes << ", inner " << inner << " -> "
          << (ok ? "agree" : "DISAGREE") << "\n";
        if (!ok) code = 1;
        return 0;
      });
    }
    return CommandResult{code, j, t.str()};
  });
}

CommandResult cmd_idd(const JobSpec& s) {
  return run([&] {
    const auto f = prime_field(s);
    const auto d = build_derivation(s, f);
    if (s.subsets.empty()) throw SpecError("idd needs a subset (--subset or \"subsets\")");
    json reports = json::array();
    std::ostringstream t;
    int code = 0;
    for (const auto& sub : s.subsets) {
      const CodeSource src{s.group->description(), d.sigma().describe(), derivation_text<PrimeField>(s), sub};
      auto c = idd_code(d, resolve(*s.group, sub), src);
      if (!c) {
        code = 1;
        reports.push_back({{"subset", sub},
                           {"rejected", {{"reason", c.rejection().reason}, {"detail", c.rejection().detail}}}});
        t << fmt_set(*s.group, resolve(*s.group, sub)) << " rejected: " << c.rejection().reason << " ("
          << c.rejection().detail << ")\n";
        continue;
      }
      const auto r = code_report(*c);
      auto rj = to_json(r);
      rj["matrix"] = matrix_text(c->generator());
      reports.push_back(rj);
      t << report_text(r) << "\n" << matrix_text(c->generator());
    }
    return CommandResult{code, {{"reports", reports}}, t.str()};
  });
}

CommandResult cmd_sweep(const JobSpec& s, std::size_t k, std::size_t max_candidates, std::uint64_t seed) {
  return run([&] {
    const auto f = prime_field(s);
    const auto d = build_derivation(s, f);
    const auto entries = subset_sweep(d, k, max_candidates, seed);
    json out = json::array();
    std::ostringstream t;
    for (const auto& e : entries) {
      out.push_back(to_json(e.report));
      t << fmt_set(*s.group, e.subset) << " " << report_text(e.report) << "\n";
    }
    return CommandResult{0, {{"k", k}, {"entries", out}}, t.str()};
  });
}

CommandResult cmd_check_report(const JobSpec& s, const nlohmann::json& report) {
  return run([&] {
    std::vector<json> items;
    if (report.is_object() && report.contains("reports")) items.assign(report["reports"].begin(), report["reports"].end());
    else items.push_back(report);
    const auto f = prime_field(s);
    const auto d = build_derivation(s, f);
    json out = json::array();
    std::ostringstream t;
    int code = 0;
    for (const auto& item : items) {
      if (item.contains("rejected")) continue;
      const auto claimed = report_from_json(item);
      const auto actual = take(code_report(d, resolve(*s.group, claimed.source.subset), claimed.source));
      const bool ok = claimed.params == actual.params && claimed.dual == actual.dual && claimed.lcd == actual.lcd &&
                      claimed.self_orthogonal == actual.self_orthogonal;
      if (!ok) code = 1;
      out.push_back({{"claimed", to_json(claimed)}, {"actual", to_json(actual)}, {"match", ok}});
      t << (ok ? "match " : "MISMATCH ") << report_text(claimed);
      if (!ok) t << " vs " << report_text(actual);
      t << "\n";
    }
    return CommandResult{code, {{"checks", out}}, t.str()};
  });
}

CommandResult cmd_reproduce(const std::string& id, const std::string& source) {
  golden::RowSource src;
  if (source == "derivation") src = golden::RowSource::derivation;
  else if (source == "printed") src = golden::RowSource::printed_matrix;
  else throw SpecError("source must be 'derivation' or 'printed'");

  std::vector<const golden::Table*> ts;
  if (id == "all") {
    for (const auto& t : golden::tables()) ts.push_back(&t);
  } else {
    ts.push_back(&golden::table(id));
  }
  if (src == golden::RowSource::printed_matrix) {
    std::erase_if(ts, [](const golden::Table* t) {
      for (const auto& m : golden::printed_matrices())
        if (m.id == t->id) return false;
      return true;
    });
    if (ts.empty()) throw SpecError("no printed matrix for table '" + id + "'");
  }

  json tables = json::array();
  std::ostringstream t;
  int code = 0;
  std::size_t passed = 0, total = 0;
  for (const auto* tb : ts) {
    json rows = json::array();
    t << "# " << tb->id << ": " << tb->title << "\n";
    for (const auto& o : golden::reproduce(*tb, src)) {
      ++total;
      if (o.pass) ++passed;
      else code = 1;
      json r{{"label", o.expected.label}, {"subset", o.expected.subset}, {"expected", to_string(o.expected.code)},
             {"expected_lcd", o.expected.lcd}, {"pass", o.pass}};
      if (o.expected.dual) r["expected_dual"] = to_string(*o.expected.dual);
      if (o.actual) r["actual"] = to_json(*o.actual);
      else r["rejected"] = o.rejection;
      rows.push_back(r);
      t << golden::format_outcome(o) << "\n";
    }
    tables.push_back({{"id", tb->id}, {"rows", rows}});
  }
  json diffs = json::array();
  for (const auto& m : golden::printed_matrices()) {
    if (id != "all" && m.id != id) continue;
    const auto c = golden::compare_printed(m.id);
    json e = json::array();
    for (const auto& x : c.diffs)
      e.push_back({{"row", x.row + 1}, {"column", x.column}, {"printed", x.printed}, {"computed", x.computed}});
    diffs.push_back({{"matrix", m.id}, {"shape_ok", c.shape_ok}, {"differences", e}});
    t << "printed matrix " << m.id << " (" << c.rows << "x" << c.cols << "): " << c.diffs.size()
      << " differing entries";
    for (const auto& x : c.diffs)
      t << "; row " << x.row + 1 << " column " << x.column << " printed " << x.printed << " computed " << x.computed;
    t << "\n";
  }
  t << passed << "/" << total << " rows reproduced\n";
  return {code, {{"tables", tables}, {"printed_matrices", diffs}, {"passed", passed}, {"total", total}}, t.str()};
}

}  // namespace tder
