// Command-line front end: build and inspect flat semirings, run identity
// checks, decide variety membership, run the verification suites, and
// enumerate small 3-nilpotent algebras. Exit codes: 0 holds/pass/member,
// 1 refuted/fail/non-member (witness on stdout), 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flatsr/flatsr.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

flatsr::LoadedInput load_file(const std::string& path, const flatsr::Config& cfg) {
  std::ifstream in(path);
  if (!in) throw flatsr::input_error("cannot open file: " + path);
  return flatsr::load_input(in, cfg);
}

flatsr::FiniteSemiring load_semiring(const std::string& path, const flatsr::Config& cfg) {
  return load_file(path, cfg).semiring;
}

std::string axiom_witness(const flatsr::FiniteSemiring& S, const std::vector<int>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? ", " : "") + S.label(w[i]);
  return out;
}

int cmd_check(const flatsr::FiniteSemiring& S, const std::string& mode,
              const flatsr::Config& cfg) {
  using flatsr::Axiom;
  auto rep = flatsr::verify_axioms(S, cfg);
  if (mode == "axioms") {
    static constexpr Axiom order[] = {Axiom::add_associative,   Axiom::add_commutative,
                                      Axiom::add_idempotent,    Axiom::mul_associative,
                                      Axiom::left_distributive, Axiom::right_distributive};
    for (Axiom a : order) {
      const auto& e = rep[a];
      std::cout << flatsr::axiom_name(a) << (e.holds ? " pass" : " fail");
      if (!e.holds) std::cout << " at " << axiom_witness(S, e.witness);
      std::cout << "\n";
    }
    return rep.all_pass() ? 0 : 1;
  }
  if (!rep.all_pass())
    throw flatsr::precondition_error("input does not satisfy the semiring axioms");
  auto prof = flatsr::flat_profile(S, cfg);
  if (mode == "flat") {
    if (prof.is_flat) {
      std::cout << "flat zero=" << S.label(*prof.zero) << "\n";
      return 0;
    }
    std::cout << "not flat\n";
    return 1;
  }
  // mode == "profile"
  std::cout << "order " << S.order << "\n";
  std::cout << "zero " << (prof.zero ? S.label(*prof.zero) : "none") << "\n";
  std::cout << "flat " << (prof.is_flat ? "true" : "false") << "\n";
  std::cout << "zero-cancellative " << (prof.is_zero_cancellative ? "true" : "false") << "\n";
  std::cout << "nilpotency-class "
            << (prof.nilpotency_class ? std::to_string(*prof.nilpotency_class) : "none") << "\n";
  std::cout << "annihilators";
  if (prof.annihilators.empty()) std::cout << " -";
  for (int a : prof.annihilators) std::cout << " " << S.label(a);
  std::cout << "\n";
  std::cout << "subdirectly-irreducible " << (prof.is_si ? "true" : "false") << "\n";
  if (prof.least_nonzero_ideal) {
    std::cout << "least-nonzero-ideal";
    for (int a : *prof.least_nonzero_ideal) std::cout << " " << S.label(a);
    std::cout << "\n";
  }
  return 0;
}

void print_suite_text(const flatsr::SuiteResult& r, bool timings) {
  std::cout << "suite " << r.name << "\n";
  for (const auto& c : r.checks) {
    std::cout << (c.pass ? "  ok   " : "  FAIL ") << c.id << "  " << c.anchor;
    if (!c.detail.empty()) std::cout << " [" << c.detail << "]";
    std::cout << "\n";
  }
  std::cout << r.name << ": " << r.passed() << "/" << r.checks.size() << " passed";
  if (timings) std::cout << " (" << r.elapsed_ms << " ms)";
  std::cout << "\n";
}

json suite_json(const flatsr::SuiteResult& r, bool timings) {
  json js;
  js["suite"] = r.name;
  js["checks"] = json::array();
  for (const auto& c : r.checks) {
    json jc;
    jc["id"] = c.id;
    jc["anchor"] = c.anchor;
    jc["pass"] = c.pass;
    jc["witness"] = c.detail;
    js["checks"].push_back(jc);
  }
  js["passed"] = r.passed();
  js["failed"] = r.failed();
  if (timings) js["elapsed_ms"] = r.elapsed_ms;
  return js;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw flatsr::input_error("not an integer list: " + s);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for finite additively idempotent semirings"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value bounds file");

  std::string in_a, in_b, mode = "axioms", identity_text, descriptor, case_name, suite_name;
  int order_max = 0;
  flatsr::ConstructionParams params;
  std::string i_list, j_list;
  bool dump_quotient = false, dump_target = false, as_json = false, timings = false;
  flatsr::SeparationBounds bounds;

  auto* c_build = app.add_subcommand("build", "construct a semiring from a build spec");
  c_build->add_option("spec", in_a, "build spec file")->required();

  auto* c_check = app.add_subcommand("check", "verify axioms or flatness");
  c_check->add_option("semiring", in_a, "semiring file")->required();
  c_check->add_option("mode", mode, "axioms|flat|profile")
      ->check(CLI::IsMember({"axioms", "flat", "profile"}));

  auto* c_sat = app.add_subcommand("sat", "test an identity against a semiring");
  c_sat->add_option("semiring", in_a, "semiring file")->required();
  c_sat->add_option("identity", identity_text, "identity, e.g. 'x1 x2 + x2 x1 = x x x'")->required();

  auto* c_iso = app.add_subcommand("iso", "find an isomorphism between two semirings");
  c_iso->add_option("first", in_a, "semiring file")->required();
  c_iso->add_option("second", in_b, "semiring file")->required();

  auto* c_member = app.add_subcommand("member", "decide variety membership");
  c_member->add_option("input", in_a, "semiring or graph file")->required();
  c_member->add_option("variety", descriptor, "NF:k VN:n VAC VCN:n VI:q1,q2 VPN:n VPNPN:n")
      ->required();

  auto* c_classify = app.add_subcommand("classify", "position of an acyclic graph in the chain");
  c_classify->add_option("input", in_a, "graph file (or SI 3-nilpotent semiring)")->required();

  auto* c_construct = app.add_subcommand("construct", "run a subpower construction case");
  c_construct
      ->add_option("case", case_name, "path-union|path-tower|loop-union|cycle-union|cycle-path|mixed|mixed-loop")
      ->required();
  c_construct->add_option("--n", params.n, "path vertex count / cycle length");
  c_construct->add_option("--m", params.m, "number of copies (power)");
  c_construct->add_option("--k", params.k, "cycle length for cycle-path");
  c_construct->add_option("--I", i_list, "cycle lengths, comma separated");
  c_construct->add_option("--J", j_list, "path vertex counts, comma separated");
  c_construct->add_flag("--dump-quotient", dump_quotient, "print the quotient semiring file only");
  c_construct->add_flag("--dump-target", dump_target, "print the target semiring file only");

  auto* c_verify = app.add_subcommand("verify", "run verification suites");
  c_verify->add_option("suite", suite_name, "suite name or 'all'")->required();
  c_verify->add_flag("--json", as_json, "machine-readable output");
  c_verify->add_flag("--timings", timings, "include elapsed milliseconds");

  auto* c_enum = app.add_subcommand("enumerate", "3-nilpotent flat semirings up to isomorphism");
  c_enum->add_option("--order-max", order_max, "largest order to enumerate")->required();

  auto* c_separate = app.add_subcommand("separate", "identity holding in A but not in B");
  c_separate->add_option("first", in_a, "semiring file A")->required();
  c_separate->add_option("second", in_b, "semiring file B")->required();
  c_separate->add_option("--max-vars", bounds.max_vars, "variable bound");
  c_separate->add_option("--max-len", bounds.max_word_len, "word length bound");
  c_separate->add_option("--max-sums", bounds.max_summands, "summand bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    flatsr::Config cfg =
        config_path.empty() ? flatsr::default_config() : flatsr::load_config_file(config_path);

    if (*c_build) {
      auto in = load_file(in_a, cfg);
      flatsr::print_semiring(std::cout, in.semiring);
      return 0;
    }
    if (*c_check) return cmd_check(load_semiring(in_a, cfg), mode, cfg);
    if (*c_sat) {
      auto S = load_semiring(in_a, cfg);
      auto id = flatsr::parse_identity(identity_text);
      auto r = flatsr::satisfies(S, id, cfg);
      if (r.holds) {
        std::cout << "holds\n";
        return 0;
      }
      std::cout << "refuted at " << flatsr::format_assignment(S, id, *r.witness) << "\n";
      return 1;
    }
    if (*c_iso) {
      auto A = load_semiring(in_a, cfg);
      auto B = load_semiring(in_b, cfg);
      auto cert = flatsr::find_isomorphism(A, B, cfg);
      if (!cert) {
        std::cout << "not isomorphic\n";
        return 1;
      }
      std::cout << "isomorphic:";
      for (std::size_t i = 0; i < cert->mapping.size(); ++i)
        std::cout << (i ? ", " : " ") << A.label(static_cast<int>(i)) << "->"
                  << B.label(cert->mapping[i]);
      std::cout << "\n";
      return 0;
    }
    if (*c_member) {
      auto in = load_file(in_a, cfg);
      auto d = flatsr::parse_variety(descriptor);
      auto v = in.graph ? flatsr::decide_membership(*in.graph, d, cfg)
                        : flatsr::decide_membership(in.semiring, d, cfg);
      if (v.member) {
        std::cout << "member: " << v.reason << "\n";
        return 0;
      }
      std::cout << "non-member: " << v.reason << "\n";
      if (v.certificate) {
        std::cout << "certificate: " << flatsr::print_identity(*v.certificate) << "\n";
        if (v.witness)
          std::cout << "witness: "
                    << flatsr::format_assignment(in.semiring, *v.certificate, *v.witness) << "\n";
      }
      return 1;
    }
    if (*c_classify) {
      auto in = load_file(in_a, cfg);
      auto G = in.graph ? *in.graph : flatsr::semiring_to_graph(in.semiring, cfg);
      std::cout << flatsr::display_variety(flatsr::classify_acyclic(G, cfg)) << "\n";
      return 0;
    }
    if (*c_construct) {
      auto kind = flatsr::parse_case(case_name);
      if (!kind) throw flatsr::input_error("unknown construction case: " + case_name);
      if (!i_list.empty()) params.I = parse_int_list(i_list);
      if (!j_list.empty()) params.J = parse_int_list(j_list);
      auto rep = flatsr::lemma_construction(*kind, params, cfg);
      if (dump_quotient) {
        flatsr::print_semiring(std::cout, rep.quotient);
        return rep.iso ? 0 : 1;
      }
      if (dump_target) {
        flatsr::print_semiring(std::cout, rep.target);
        return rep.iso ? 0 : 1;
      }
      std::cout << "case " << flatsr::case_name(rep.kind) << "\n";
      std::cout << "power " << rep.power << (rep.padded ? " (padded)" : "") << "\n";
      if (rep.reconstruction) std::cout << "reconstruction true\n";
      std::cout << "base " << rep.base.name << " order " << rep.base.order << "\n";
      std::cout << "generators";
      for (const auto& g : rep.generator_labels) std::cout << " " << g;
      std::cout << "\n";
      std::cout << "subpower " << rep.subpower_size << "\n";
      std::cout << "ideal " << rep.ideal_size << "\n";
      std::cout << "quotient order " << rep.quotient.order << "\n";
      std::cout << "target " << rep.target.name << " order " << rep.target.order << "\n";
      if (!rep.note.empty()) std::cout << "note " << rep.note << "\n";
      if (!rep.iso) {
        std::cout << "no isomorphism found\n";
        return 1;
      }
      std::cout << "isomorphic:";
      for (std::size_t i = 0; i < rep.iso->mapping.size(); ++i)
        std::cout << (i ? ", " : " ") << rep.quotient.label(static_cast<int>(i)) << "->"
                  << rep.target.label(rep.iso->mapping[i]);
      std::cout << "\n";
      return 0;
    }
    if (*c_verify) {
      std::vector<flatsr::SuiteResult> results;
      if (suite_name == "all")
        results = flatsr::run_all(cfg);
      else
        results.push_back(flatsr::run_suite(suite_name, cfg));
      bool pass = true;
      if (as_json) {
        if (results.size() == 1) {
          std::cout << suite_json(results[0], timings).dump(2) << "\n";
        } else {
          json all = json::array();
          for (const auto& r : results) all.push_back(suite_json(r, timings));
          std::cout << all.dump(2) << "\n";
        }
        for (const auto& r : results) pass = pass && r.pass();
      } else {
        int total = 0, ok = 0;
        for (const auto& r : results) {
          print_suite_text(r, timings);
          pass = pass && r.pass();
          total += static_cast<int>(r.checks.size());
          ok += r.passed();
        }
        if (results.size() > 1)
          std::cout << "all suites: " << ok << "/" << total << " checks passed\n";
      }
      return pass ? 0 : 1;
    }
    if (*c_enum) {
      for (const auto& r : flatsr::enumerate_3nilpotent(order_max, cfg))
        std::cout << flatsr::print_record(r) << "\n";
      return 0;
    }
    if (*c_separate) {
      auto A = load_semiring(in_a, cfg);
      auto B = load_semiring(in_b, cfg);
      auto id = flatsr::find_separating_identity(A, B, bounds, cfg);
      if (!id) {
        std::cout << "no separating identity within bounds\n";
        return 1;
      }
      std::cout << flatsr::print_identity(*id) << "\n";
      return 0;
    }
    return 2;
  } catch (const flatsr::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const flatsr::precondition_error& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return 2;
  } catch (const flatsr::resource_error& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
