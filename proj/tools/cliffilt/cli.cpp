#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "cliffilt/bifiltration.hpp"
#include "cliffilt/constructions.hpp"
#include "cliffilt/deformation.hpp"
#include "cliffilt/error.hpp"
#include "cliffilt/graph.hpp"
#include "cliffilt/invariants.hpp"
#include "cliffilt/io.hpp"
#include "cliffilt/random.hpp"

namespace cliffilt::cli {

namespace {

using io::json;

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  std::string input;
  std::string output;
};

// A precondition on the input failed. Reported as a certificate, exit 1.
struct CheckFailure {
  Certificate certificate;
};

json read_document(Context& ctx) {
  std::string text;
  if (ctx.input.empty() || ctx.input == "-") {
    std::ostringstream ss;
    ss << ctx.in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream file(ctx.input);
    if (!file) throw ParseError("cannot open input file '" + ctx.input + "'");
    std::ostringstream ss;
    ss << file.rdbuf();
    text = ss.str();
  }
  return io::parse(text);
}

json read_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return io::parse(ss.str());
}

void emit_text(Context& ctx, const std::string& text) {
  if (ctx.output.empty() || ctx.output == "-") {
    ctx.out << text;
    return;
  }
  std::ofstream file(ctx.output);
  if (!file) throw ParseError("cannot open output file '" + ctx.output + "'");
  file << text;
}

void emit(Context& ctx, const json& doc) { emit_text(ctx, doc.dump(2) + "\n"); }

void expect_type(const json& doc, std::initializer_list<const char*> types) {
  const std::string t = io::document_type(doc);
  for (const char* allowed : types)
    if (t == allowed) return;
  std::string list;
  for (const char* allowed : types) list += std::string(list.empty() ? "" : ", ") + allowed;
  throw ParseError("expected a document of type " + list + ", got '" + t + "'");
}

void require(const Certificate& c) {
  if (!c) throw CheckFailure{c};
}

SuperFiltration valid_filtration(Context& ctx) {
  const json doc = read_document(ctx);
  expect_type(doc, {"filtration"});
  SuperFiltration f = io::filtration_from_json(doc);
  require(check_supermodule(f.module()));
  require(check_filtration(f));
  return f;
}

std::map<std::string, std::function<SuperFiltration()>> example_table() {
  std::map<std::string, std::function<SuperFiltration()>> t{
      {"exterior4-degree", [] { return degree_filtration(4); }},
      {"exterior4-hodge", [] { return hodge_filtration(); }},
      {"cl5-irreducible", [] { return trivial_filtration(irreducible_cl5()); }},
      {"cl1-trivial", [] { return trivial_filtration(exterior_module(1)); }},
  };
  for (std::size_t n = 1; n <= 5; ++n) {
    t.emplace("exterior" + std::to_string(n) + "-degree", [n] { return degree_filtration(n); });
    t.emplace("cl" + std::to_string(n) + "-irreducible", [n] { return trivial_filtration(irreducible_module(n)); });
  }
  return t;
}

DimSequence parse_target(const std::string& s) {
  DimSequence out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("target must be a comma-separated list of non-negative integers");
    out.push_back(static_cast<std::size_t>(std::stoul(item)));
  }
  if (out.empty()) throw ParseError("empty target");
  return out;
}

std::pair<Matrix, Matrix> basis_from(const std::string& path, const SuperFiltration& f) {
  if (path.empty()) return {Matrix::identity(f.module().dim_even()), Matrix::identity(f.module().dim_odd())};
  const json doc = read_file(path);
  expect_type(doc, {"basis"});
  return {io::matrix_from_json(doc.at("even")), io::matrix_from_json(doc.at("odd"))};
}

AdinkraGraph adapted_graph(const SuperFiltration& f, const std::string& basis_path) {
  const auto [even, odd] = basis_from(basis_path, f);
  try {
    return to_graph(f, even, odd);
  } catch (const ContractError& e) {
    throw CheckFailure{Certificate::fail("adapted_basis", {{"error", e.what()}})};
  }
}

json summand_json(const Summand& s) {
  return {{"filtration", io::to_json(s.filtration)},
          {"even_embedding", io::to_json(s.even_embedding)},
          {"odd_embedding", io::to_json(s.odd_embedding)},
          {"gr_dims", gr_dimensions(s.filtration)},
          {"source_dims", source_dimensions(s.filtration)},
          {"status", to_string(s.status)},
          {"certificate", s.certificate.to_json()}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx{in, out, err, {}, {}};
  CLI::App app{"Filtered Clifford supermodules and off-shell supersymmetry representations, in exact arithmetic",
               "cliffilt"};
  app.require_subcommand(1, 1);
  int status = kExitOk;
  std::function<void()> action;

  auto with_io = [&](CLI::App* sub, bool takes_input = true) {
    if (takes_input) sub->add_option("input", ctx.input, "Input document (default: stdin)");
    sub->add_option("-o,--output", ctx.output, "Output path (default: stdout)");
  };

  std::string example_name;
  auto* example = app.add_subcommand("example", "Emit a named filtered module");
  example->add_option("name", example_name, "exterior4-degree | exterior4-hodge | cl5-irreducible | cl1-trivial | "
                                            "exterior<N>-degree | cl<N>-irreducible")
      ->required();
  with_io(example, false);
  example->callback([&] {
    action = [&] {
      const auto table = example_table();
      const auto it = table.find(example_name);
      if (it == table.end()) throw ParseError("unknown example '" + example_name + "'");
      emit(ctx, io::to_json(it->second()));
    };
  });

  auto* check = app.add_subcommand("check", "Validate any document and emit a certificate");
  with_io(check);
  check->callback([&] {
    action = [&] {
      const json doc = read_document(ctx);
      const std::string type = io::document_type(doc);
      Certificate c;
      if (type == "module") c = check_supermodule(*io::module_from_json(doc));
      else if (type == "filtration") {
        const SuperFiltration f = io::filtration_from_json(doc);
        c = check_supermodule(f.module());
        if (c) c = check_filtration(f);
      }
      else if (type == "offshell") c = verify_offshell(io::offshell_from_json(doc));
      else if (type == "bimodule") c = check_bimodule(*io::bimodule_from_json(doc));
      else if (type == "bifiltration") c = check_bifiltration(io::bifiltration_from_json(doc));
      else if (type == "bigraded") c = verify_2d(io::bigraded_from_json(doc));
      else throw ParseError("check does not handle documents of type '" + type + "'");
      emit(ctx, io::to_json(c));
      status = c ? kExitOk : kExitCheckFailed;
    };
  });

  auto* deform_cmd = app.add_subcommand("deform", "Filtered module to graded off-shell representation");
  with_io(deform_cmd);
  deform_cmd->callback([&] { action = [&] { emit(ctx, io::to_json(deform(valid_filtration(ctx)))); }; });

  std::string k_text = "1";
  auto* quotient = app.add_subcommand("quotient", "Specialize H to k (k = 0 gives the graded quotient)");
  quotient->add_option("--k", k_text, "Rational shell value, k >= 0")->capture_default_str();
  with_io(quotient);
  quotient->callback([&] {
    action = [&] {
      const Rational k = Rational::parse(k_text);
      if (k.sign() < 0) throw ParseError("--k must be non-negative");
      const json doc = read_document(ctx);
      expect_type(doc, {"offshell"});
      const OffShellRep r = io::offshell_from_json(doc);
      require(verify_offshell(r));
      if (k.is_zero()) {
        const GradedSpace g = graded_quotient(r);
        json maps = json::array();
        for (const auto& row : g.maps) {
          json ms = json::array();
          for (const auto& m : row) ms.push_back(io::to_json(m));
          maps.push_back(std::move(ms));
        }
        emit(ctx, io::document("graded", {{"dims", g.dims}, {"maps", std::move(maps)}}));
      } else {
        emit(ctx, io::to_json(quotient_at(r, k).filtration));
      }
    };
  });

  auto* roundtrip = app.add_subcommand("roundtrip", "Verify the canonical isomorphism V -> quotient(deform(V), 1)");
  with_io(roundtrip);
  roundtrip->callback([&] {
    action = [&] {
      const FilteredIso iso = canonical_roundtrip_iso(valid_filtration(ctx));
      json doc = io::to_json(iso.certificate);
      doc["even"] = io::to_json(iso.even);
      doc["odd"] = io::to_json(iso.odd);
      emit(ctx, doc);
      status = iso.certificate ? kExitOk : kExitCheckFailed;
    };
  });

  auto* invariants = app.add_subcommand("invariants", "gr dimensions, source dimensions and summand invariants");
  with_io(invariants);
  invariants->callback([&] { action = [&] { emit(ctx, io::to_json(invariant_report(valid_filtration(ctx)))); }; });

  auto* decompose_cmd = app.add_subcommand("decompose", "Split into filtered summands");
  with_io(decompose_cmd);
  decompose_cmd->callback([&] {
    action = [&] {
      const Decomposition d = decompose(valid_filtration(ctx));
      json summands = json::array();
      for (const auto& s : d.summands) summands.push_back(summand_json(s));
      emit(ctx, io::document("decomposition", {{"summands", std::move(summands)}, {"certificate", d.certificate.to_json()}}));
      status = d.certificate ? kExitOk : kExitCheckFailed;
    };
  });

  std::string target_text;
  std::size_t budget = 1000;
  std::uint64_t seed = Rng::kDefaultSeed;
  auto* search = app.add_subcommand("search", "Randomized search for filtrations with given gr dimensions");
  search->add_option("--target", target_text, "Comma-separated gr dimensions, e.g. 2,8,6")->required();
  search->add_option("--budget", budget, "Number of attempts")->capture_default_str();
  search->add_option("--seed", seed, "Random seed")->capture_default_str();
  with_io(search);
  search->callback([&] {
    action = [&] {
      const DimSequence target = parse_target(target_text);
      const json doc = read_document(ctx);
      expect_type(doc, {"module", "filtration"});
      const ModulePtr m = io::document_type(doc) == "module" ? io::module_from_json(doc)
                                                             : io::filtration_from_json(doc).module_ptr();
      require(check_supermodule(*m));
      Rng rng(seed);
      SearchResult r;
      try {
        r = filtration_search(m, target, budget, rng);
      } catch (const ContractError& e) {
        throw ParseError(e.what());
      }
      json found = json::array();
      for (const auto& f : r.found)
        found.push_back({{"gr_dims", gr_dimensions(f)}, {"source_dims", source_dimensions(f)}, {"filtration", io::to_json(f)}});
      emit(ctx, io::document("search", {{"target", target},
                                        {"budget", budget},
                                        {"seed", seed},
                                        {"attempts", r.attempts},
                                        {"hits", r.hits},
                                        {"found", std::move(found)}}));
    };
  });

  std::size_t p = 2, q = 3;
  bool random = false;
  auto* tensor = app.add_subcommand("tensor", "Bifiltered Cl(p) (x) Cl(q) module, checked against Cl(p+q)");
  tensor->add_option("--p", p, "Generators of the + factor")->capture_default_str();
  tensor->add_option("--q", q, "Generators of the - factor")->capture_default_str();
  tensor->add_flag("--random", random, "Random bifiltration of the same module (uses --seed)");
  tensor->add_option("--seed", seed, "Random seed")->capture_default_str();
  with_io(tensor, false);
  tensor->callback([&] {
    action = [&] {
      if (p < 1 || q < 1 || p + q > 8) throw ParseError("--p and --q must be positive with p + q <= 8");
      const TwistedTensor t(std::make_shared<const CliffordAlgebra>(p), std::make_shared<const CliffordAlgebra>(q));
      require(check_twisted_clifford(t));
      Rng rng(seed);
      emit(ctx, io::to_json(random ? random_bifiltration(p, q, rng) : regular_bifiltered_module(p, q)));
    };
  });

  auto* bideform_cmd = app.add_subcommand("bideform", "Bifiltered module to bigraded off-shell representation");
  with_io(bideform_cmd);
  bideform_cmd->callback([&] {
    action = [&] {
      const json doc = read_document(ctx);
      expect_type(doc, {"bifiltration"});
      const Bifiltration f = io::bifiltration_from_json(doc);
      require(check_bifiltration(f));
      emit(ctx, io::to_json(bideform(f)));
    };
  });

  auto* biquotient_cmd = app.add_subcommand("biquotient", "Bigraded representation to bifiltered module");
  with_io(biquotient_cmd);
  biquotient_cmd->callback([&] {
    action = [&] {
      const json doc = read_document(ctx);
      expect_type(doc, {"bigraded"});
      const BiGradedRep r = io::bigraded_from_json(doc);
      require(verify_2d(r));
      emit(ctx, io::to_json(biquotient(r)));
    };
  });

  auto* verify2d = app.add_subcommand("verify2d", "Check the two-dimensional supersymmetry relations");
  with_io(verify2d);
  verify2d->callback([&] {
    action = [&] {
      const json doc = read_document(ctx);
      expect_type(doc, {"bigraded"});
      const Certificate c = verify_2d(io::bigraded_from_json(doc));
      emit(ctx, io::to_json(c));
      status = c ? kExitOk : kExitCheckFailed;
    };
  });

  std::string basis_path;
  bool graph_json = false;
  auto* dot = app.add_subcommand("export-dot", "Adinkra-style graph of a filtration on an adapted basis");
  dot->add_option("--basis", basis_path, "Basis document (default: the coordinate basis)");
  dot->add_flag("--json", graph_json, "Emit the graph as JSON instead of DOT");
  with_io(dot);
  dot->callback([&] {
    action = [&] {
      const AdinkraGraph g = adapted_graph(valid_filtration(ctx), basis_path);
      if (graph_json) emit(ctx, io::to_json(g));
      else emit_text(ctx, to_dot(g));
    };
  });

  std::size_t height_budget = 1000000;
  auto* heights = app.add_subcommand("heights", "Enumerate height assignments of the graph of a filtration");
  heights->add_option("--basis", basis_path, "Basis document (default: the coordinate basis)");
  heights->add_option("--budget", height_budget, "Search-node budget")->capture_default_str();
  with_io(heights);
  heights->callback([&] {
    action = [&] {
      const SuperFiltration f = valid_filtration(ctx);
      const AdinkraGraph g = adapted_graph(f, basis_path);
      const HeightEnumeration e = enumerate_heights(f.module_ptr(), g, height_budget);
      json assignments = json::array();
      for (const auto& h : e.heights) assignments.push_back({{"heights", h}, {"sources", sources(g, h)}});
      emit(ctx, io::document("heights", {{"count", e.heights.size()},
                                         {"budget_exhausted", e.budget_exhausted},
                                         {"explored", e.explored},
                                         {"assignments", std::move(assignments)}}));
    };
  });

  std::size_t env_n = 2, env_degree = 6, env_samples = 100;
  auto* envelope = app.add_subcommand("envelope", "Check Def_s Cl(N) against the super Poincare relations");
  envelope->add_option("--n", env_n, "Number of generators, 1..6")->capture_default_str();
  envelope->add_option("--degree", env_degree, "Maximal degree")->capture_default_str();
  envelope->add_option("--samples", env_samples, "Sampled kernel elements")->capture_default_str();
  envelope->add_option("--seed", seed, "Random seed")->capture_default_str();
  with_io(envelope, false);
  envelope->callback([&] {
    action = [&] {
      if (env_n < 1 || env_n > 6) throw ParseError("--n must be between 1 and 6");
      const Certificate c = enveloping_quotient_check(env_n, env_degree, {env_samples, seed});
      emit(ctx, io::to_json(c));
      status = c ? kExitOk : kExitCheckFailed;
    };
  });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }
  try {
    if (action) action();
  } catch (const CheckFailure& f) {
    emit(ctx, io::to_json(f.certificate));
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "cliffilt: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "cliffilt: " << e.what() << "\n";
    return kExitBadInput;
  }
  return status;
}

}  // namespace cliffilt::cli
