#include "dgrep/commands.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>

#include "dgrep/algebra.hpp"
#include "dgrep/error.hpp"
#include "dgrep/ext.hpp"
#include "dgrep/generator.hpp"
#include "dgrep/io.hpp"

namespace dgrep {

namespace {

namespace fs = std::filesystem;

// Maps exceptions onto the exit-code contract.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisViolation& e) {
    err << "hypothesis violation: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

Representation load_rep(const std::string& path, const Options& opt) {
  return representation_from_json(read_json_file(path), opt.field, opt.validate);
}

void print_report(std::ostream& out, const Report& r) {
  for (const auto& c : r.checks) {
    out << (c.ok ? "PASS " : "FAIL ") << c.name;
    if (!c.ok) out << ": " << c.counterexample;
    out << "\n";
  }
}

void throwing_check(Report& r, const std::string& name, const std::function<void()>& f) {
  Check& c = r.add(name);
  try {
    f();
  } catch (const AxiomFailure& e) {
    Report::fail(c, e.what());
  }
}

Report representation_report(const Representation& rep) {
  Report r = check_axioms(rep.digroup());
  r.append(check_representation(rep));
  throwing_check(r, "rho depends only on g", [&] { rho_group_form(rep); });
  throwing_check(r, "lambda_(g,a) = L_a rho_g", [&] { lambda_factorization(rep); });
  return r;
}

// Writes every file or none: contents are rendered before anything touches disk.
void write_all(const std::string& dir, const std::map<std::string, std::string>& files) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error("cannot create directory " + dir + ": " + ec.message());
  for (const auto& [name, body] : files) {
    fs::path tmp = fs::path(dir) / (name + ".tmp");
    std::ofstream o(tmp);
    if (!(o << body)) throw Error("cannot write " + tmp.string());
  }
  for (const auto& [name, body] : files) fs::rename(fs::path(dir) / (name + ".tmp"), fs::path(dir) / name);
}

void emit(std::ostream& out, const Options& opt, const Json& j, const std::vector<std::string>& text_keys) {
  if (opt.json) {
    out << dump(j);
    return;
  }
  for (const auto& k : text_keys)
    if (j.contains(k)) out << k << ": " << (j[k].is_string() ? j[k].get<std::string>() : j[k].dump()) << "\n";
}

Json collapse_json(const CollapseReport& c) {
  return {{"hom_BE_dim", c.hom_be_dim},
          {"invariants_dim", c.hom_be_invariant_dim},
          {"hom_rep_dim", c.hom_rep_dim},
          {"ext1_BE_dim", c.ext1_be_dim},
          {"ext1_BE_invariant_dim", c.ext1_be_invariant_dim},
          {"ext1_rep_dim", c.ext1_rep_dim},
          {"collapse_ok", c.collapse_ok},
          {"report", report_to_json(c.report)}};
}

}  // namespace

Representation nonsplit_example(Field f) {
  Digroup d = Digroup::trivial_action(FiniteGroup::cyclic(2), 2);
  Matrix p0 = Matrix::from_ints({{1, 0}, {0, 0}}, f);
  Matrix p1 = Matrix::from_ints({{1, 0}, {1, 0}}, f);
  std::vector<Matrix> lambda, rho;
  for (Element x : d.elements()) {
    Scalar chi(x.g == 0 ? 1 : -1, f);
    rho.push_back(Matrix::scalar(2, chi));
    lambda.push_back(chi * (x.alpha == 0 ? p0 : p1));
  }
  return Representation(d, 2, std::move(lambda), std::move(rho), f);
}

std::vector<Vector> nonsplit_example_w_basis(Field f) { return {{Scalar(0, f), Scalar(1, f)}}; }

OracleComparison compare_oracles(const Representation& q, const Representation& w) {
  OracleComparison out;
  out.cocycles = ext1_dim(q, w);
  FDAlgebra a = build_enveloping_algebra(q.digroup(), q.field());
  out.derivation_dim = derivation_ext1(a, rep_to_module(q), rep_to_module(w)).dim;
  out.collapse = verify_collapse(q, w);
  out.agree = out.cocycles.dim_ext == out.derivation_dim &&
              out.cocycles.dim_ext == out.collapse.ext1_be_invariant_dim && out.collapse.collapse_ok;
  return out;
}

int cmd_check(const std::string& path, const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Json j = read_json_file(path);
    Report r;
    if (j.is_object() && j.contains("V")) {
      SesFile s = ses_from_json(j, opt.field, false);
      r = representation_report(s.v);
      Check& stable = r.add("W is a subrepresentation");
      if (!is_subrepresentation(s.v, s.w_basis)) Report::fail(stable, "span of W_basis is not stable");
      else if (r.ok()) r.append(check_ses(ses_from_subspace(s.v, s.w_basis)));
    } else if (j.is_object() && j.contains("lambda")) {
      r = representation_report(representation_from_json(j, opt.field, false));
    } else if (j.is_object() && j.contains("group")) {
      Digroup d = digroup_from_json(j, false);
      r = d.group().check();
      r.append(d.action().check());
      if (r.ok()) r.append(check_axioms(d));
    } else {
      throw ParseError(path + ": not a digroup, representation or SES file");
    }
    if (opt.json) out << dump(report_to_json(r));
    else print_report(out, r);
    return r.ok() ? 0 : 1;
  });
}

int cmd_ext1(const std::string& q_path, const std::string& w_path, const Options& opt, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    Representation q = load_rep(q_path, opt), w = load_rep(w_path, opt);
    if (!(q.digroup() == w.digroup())) throw ParseError("Q and W live on different digroups");
    OracleComparison c = compare_oracles(q, w);
    Json j = {{"dim_Z", c.cocycles.dim_z},
              {"dim_B", c.cocycles.dim_b},
              {"dim_ext", c.cocycles.dim_ext},
              {"derivation_ext1", c.derivation_dim},
              {"ext1_BE_dim", c.collapse.ext1_be_dim},
              {"ext1_BE_invariant_dim", c.collapse.ext1_be_invariant_dim},
              {"collapse_ok", c.collapse.collapse_ok},
              {"oracles_agree", c.agree}};
    emit(out, opt, j,
         {"dim_Z", "dim_B", "dim_ext", "derivation_ext1", "ext1_BE_dim", "ext1_BE_invariant_dim", "collapse_ok",
          "oracles_agree"});
    if (!c.agree) err << "oracle disagreement\n";
    return c.agree ? 0 : 1;
  });
}

int cmd_split(const std::string& ses_path, const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    SesFile f = ses_from_json(read_json_file(ses_path), opt.field, opt.validate);
    ShortExactSeq s = ses_from_subspace(f.v, f.w_basis);
    Ext1Result e = ext1_dim(s.q, s.w);
    SplitResult sp = is_split(s);
    Json j = {{"dim_Z", e.dim_z},
              {"dim_B", e.dim_b},
              {"dim_ext", e.dim_ext},
              {"split", sp.split},
              {"verdict", sp.split ? "split" : "nonsplit"}};
    if (sp.split) j["witness"] = matrix_to_json(*sp.witness);
    else j["certificate"] = family_to_json(s.v.digroup(), sp.certificate);
    emit(out, opt, j, {"verdict", "dim_Z", "dim_B", "dim_ext"});
    return 0;
  });
}

int cmd_collapse(const std::string& q_path, const std::string& w_path, const Options& opt, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    Representation q = load_rep(q_path, opt), w = load_rep(w_path, opt);
    if (!(q.digroup() == w.digroup())) throw ParseError("Q and W live on different digroups");
    CollapseReport c = verify_collapse(q, w);
    if (opt.json) {
      out << dump(collapse_json(c));
    } else {
      emit(out, opt, collapse_json(c),
           {"hom_BE_dim", "invariants_dim", "hom_rep_dim", "ext1_BE_dim", "ext1_BE_invariant_dim", "ext1_rep_dim",
            "collapse_ok"});
      for (const auto& ch : c.report.checks)
        if (!ch.ok) out << "FAIL " << ch.name << ": " << ch.counterexample << "\n";
    }
    return c.collapse_ok ? 0 : 1;
  });
}

int cmd_probe(const std::vector<std::string>& paths, const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<Representation> reps;
    for (const auto& p : paths) reps.push_back(load_rep(p, opt));
    for (std::size_t i = 1; i < reps.size(); ++i)
      if (!(reps[i].digroup() == reps[0].digroup())) throw ParseError(paths[i] + ": different digroup");
    auto certs = semisimplicity_probe(reps);
    Json list = Json::array();
    for (const auto& c : certs)
      list.push_back({{"Q", paths[c.q_index]},
                      {"W", paths[c.w_index]},
                      {"dim_ext", c.dim_ext},
                      {"cocycle", family_to_json(reps[0].digroup(), c.cocycle)}});
    Json j = {{"semisimple_on_inputs", certs.empty()}, {"certificates", list}};
    if (opt.json) {
      out << dump(j);
    } else {
      out << "certificates: " << certs.size() << "\n";
      for (const auto& c : certs)
        out << "Ext^1(" << paths[c.q_index] << ", " << paths[c.w_index] << ") has dim " << c.dim_ext << "\n";
    }
    return 0;
  });
}

int cmd_example(const std::string& name, const std::string& out_dir, const Options& opt, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    if (name != "nonsplit" && name != "sec5") throw ParseError("unknown example \"" + name + "\"");
    Field f = opt.field.value_or(Field::rational());
    Representation v = nonsplit_example(f);
    auto basis = nonsplit_example_w_basis(f);
    SubQuotient sq = sub_quotient(v, basis);
    std::map<std::string, std::string> files = {
        {"digroup.json", dump(digroup_to_json(v.digroup()))},
        {"V.json", dump(representation_to_json(v))},
        {"W.json", dump(representation_to_json(sq.sub))},
        {"Q.json", dump(representation_to_json(sq.quotient))},
        {"ses.json", dump(ses_to_json({v, basis}))},
    };
    write_all(out_dir, files);
    for (const auto& [file, body] : files) out << (fs::path(out_dir) / file).string() << "\n";
    return 0;
  });
}

int cmd_generate(const GenerateSpec& spec, const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (spec.group_order == 0 || spec.group_order > kMaxGroupOrder)
      throw ParseError("group order must be in 1.." + std::to_string(kMaxGroupOrder));
    if (spec.halo_size == 0 || spec.halo_size > kMaxHaloSize)
      throw ParseError("halo size must be in 1.." + std::to_string(kMaxHaloSize));
    if (spec.dim > kMaxDim) throw ParseError("dim must be at most " + std::to_string(kMaxDim));
    if (spec.count == 0) throw ParseError("count must be positive");
    Field f = opt.field.value_or(Field::rational());
    Rng rng(spec.seed);
    Digroup d = random_digroup(rng, random_group(rng, spec.group_order), spec.halo_size);
    std::vector<Representation> reps;
    for (std::size_t i = 0; i < spec.count; ++i) {
      reps.push_back(random_representation(rng, d, spec.dim, f));
      Report r = check_representation(reps.back());
      if (!r.ok()) throw Error("generator produced an invalid representation (" + r.first_failure()->name + ")");
    }
    if (spec.out_dir.empty()) {
      if (spec.count != 1) throw ParseError("--count > 1 needs --out");
      out << dump(representation_to_json(reps.front()));
      return 0;
    }
    std::map<std::string, std::string> files = {{"digroup.json", dump(digroup_to_json(d))}};
    for (std::size_t i = 0; i < reps.size(); ++i)
      files["rep" + std::to_string(i) + ".json"] = dump(representation_to_json(reps[i]));
    write_all(spec.out_dir, files);
    for (const auto& [file, body] : files) out << (fs::path(spec.out_dir) / file).string() << "\n";
    return 0;
  });
}

}  // namespace dgrep
