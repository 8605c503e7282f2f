#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"

#include "totdom/domination.hpp"
#include "totdom/families.hpp"
#include "totdom/graph6.hpp"
#include "totdom/harness.hpp"

namespace totdom {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

nlohmann::ordered_json witness_json(const VertexSet& s) { return s.to_vector(); }

std::string classification_text(const Classification& c) {
  if (c.verdict == Verdict::NotInFamilies || c.verdict == Verdict::GcubGP16) return to_string(c.verdict);
  return to_string(c.verdict) + " " + std::to_string(c.k);
}

// A violation outranks a usage error, which outranks success.
int worst(int a, int b) {
  if (a == kExitViolation || b == kExitViolation) return kExitViolation;
  return std::max(a, b);
}

// Runs `handle` on every graph6 line of the input; decode and domain errors
// are reported with line numbers and turn the exit code into 2.
template <typename Handle>
int for_each_graph(std::istream& in, std::ostream& err, Handle&& handle) {
  int code = kExitOk;
  for (const auto& line : read_graph6_lines(in)) {
    if (line.text.empty()) continue;
    try {
      code = worst(code, handle(graph6_decode(line.text)));
    } catch (const BoundViolation& e) {
      err << "line " << line.line_number << ": bound violation: " << e.what() << '\n';
      code = kExitViolation;
    } catch (const InternalInconsistency& e) {
      err << "line " << line.line_number << ": internal inconsistency: " << e.what() << '\n';
      code = kExitViolation;
    } catch (const std::exception& e) {
      err << "line " << line.line_number << ": " << e.what() << '\n';
      code = worst(code, kExitUsage);
    }
  }
  return code;
}

void write_edgelist(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

FamilyMember generate_member(const std::string& family, std::size_t k) {
  if (family == "G") return gen_G(k);
  if (family == "H") return gen_H(k);
  if (family == "GP16") return gen_GP16();
  if (family == "F") return gen_F(k);
  if (family == "L") return gen_L(k);
  if (family == "corona-cycle") return two_corona(gen_cycle(k));
  throw std::invalid_argument("unknown family " + family);
}

void print_summary(std::ostream& out, const EnumerationSummary& s) {
  for (const auto& [order, count] : s.examined_by_order)
    out << "order " << order << ": " << count << " graphs verified\n";
  out << "inputs " << s.inputs << ", verified " << s.verified << ", skipped " << s.skipped << ", malformed "
      << s.malformed << '\n';
  out << "extremal graphs: " << s.extremal.size() << '\n';
  for (const auto& e : s.extremal)
    out << "  " << e.graph6 << "  n=" << graph6_decode(e.graph6).order() << " gamma_t=" << e.gamma_t << "  "
        << classification_text(e.classification) << '\n';
  out << "violations: " << s.violations.size() << '\n';
  for (const auto& v : s.violations) {
    out << "  " << v.graph6;
    if (v.line > 0) out << " (line " << v.line << ")";
    out << ": " << v.reason << '\n';
  }
}

void print_summary_csv(std::ostream& out, const EnumerationSummary& s) {
  out << "kind,graph6,line,gamma_t,family,k,reason\n";
  for (const auto& e : s.extremal) {
    const auto cj = to_json(e.classification);
    out << "extremal," << e.graph6 << ',' << e.line << ',' << e.gamma_t << ',' << to_string(e.classification.verdict)
        << ',' << (cj["k"].is_null() ? std::string{} : std::to_string(e.classification.k)) << ",\n";
  }
  for (const auto& v : s.violations) out << "violation," << v.graph6 << ',' << v.line << ",,,,\"" << v.reason << "\"\n";
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact total domination, extremal family generation and recognition, and bound verification"};
  app.require_subcommand(1);

  std::string input_file;
  bool json = false;
  bool csv = false;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", input_file, "graph6 file (default: stdin)");
  };

  auto* gamma = app.add_subcommand("gamma-t", "total domination number and a minimum TD-set per graph6 line");
  bool oracle = false;
  gamma->add_flag("--oracle", oracle, "use exhaustive subset enumeration (order <= 24)");
  gamma->add_flag("--json", json);
  add_input(gamma);

  auto* atd = app.add_subcommand("atd", "almost total domination number with respect to a vertex");
  int anchor = 0;
  atd->add_option("--vertex", anchor, "anchor vertex")->required();
  atd->add_flag("--json", json);
  add_input(atd);

  auto* classify_cmd = app.add_subcommand("classify", "membership in the extremal families");
  classify_cmd->add_flag("--json", json);
  add_input(classify_cmd);

  auto* check = app.add_subcommand("check", "extremality report (JSON lines)");
  check->add_flag("--csv", csv);
  add_input(check);

  auto* generate = app.add_subcommand("generate", "emit a family member");
  std::string family;
  std::size_t k = 0;
  std::string format = "graph6";
  generate->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"G", "H", "GP16", "F", "L", "corona-cycle"}));
  generate->add_option("--k", k, "family parameter (cycle length for corona-cycle)");
  generate->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));

  auto* enumerate = app.add_subcommand("enumerate", "all connected graphs of one order, canonical graph6");
  std::size_t enum_n = 0;
  enumerate->add_option("--n", enum_n)->required()->check(CLI::Range(std::size_t{1}, kEnumerateMaxOrder));

  auto* verify = app.add_subcommand("verify", "check the bound and its equality cases over many graphs");
  std::size_t max_n = 0;
  std::size_t jobs = 1;
  auto* max_opt = verify->add_option("--max-n", max_n, "enumerate connected graphs of order 3..N (N <= 8)")
                      ->check(CLI::Range(std::size_t{1}, kEnumerateMaxOrder));
  auto* in_opt = verify->add_option("--input", input_file, "graph6 file");
  max_opt->excludes(in_opt);
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify->add_flag("--json", json);
  verify->add_flag("--csv", csv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  std::unique_ptr<std::ifstream> file;
  std::istream* source = &in;
  if (!input_file.empty()) {
    file = std::make_unique<std::ifstream>(input_file);
    if (!*file) {
      err << "cannot open " << input_file << '\n';
      return kExitUsage;
    }
    source = file.get();
  }

  try {
    if (*gamma) {
      return for_each_graph(*source, err, [&](const Graph& g) {
        const auto cert = oracle ? gamma_t_oracle(g) : gamma_t(g);
        if (json) {
          out << nlohmann::ordered_json{{"gamma_t", cert.value}, {"witness", witness_json(cert.witness)}}.dump()
              << '\n';
        } else {
          out << cert.value << ' ' << to_string(cert.witness) << '\n';
        }
        return kExitOk;
      });
    }
    if (*atd) {
      return for_each_graph(*source, err, [&](const Graph& g) {
        const auto cert = gamma_t_almost(g, anchor);
        if (json) {
          nlohmann::ordered_json j{{"vertex", anchor}, {"feasible", cert.has_value()}};
          if (cert) {
            j["gamma_t_almost"] = cert->value;
            j["witness"] = witness_json(cert->witness);
          }
          out << j.dump() << '\n';
        } else if (cert) {
          out << cert->value << ' ' << to_string(cert->witness) << '\n';
        } else {
          out << "infeasible\n";
        }
        return kExitOk;
      });
    }
    if (*classify_cmd) {
      return for_each_graph(*source, err, [&](const Graph& g) {
        const auto c = classify(g);
        out << (json ? to_json(c).dump() : classification_text(c)) << '\n';
        return kExitOk;
      });
    }
    if (*check) {
      if (csv) out << "n,m,max_degree,effective_delta,gamma_t,bound,extremal,family,k\n";
      return for_each_graph(*source, err, [&](const Graph& g) {
        const auto r = check_bound(g);
        if (csv) {
          const auto cj = to_json(r.classification);
          out << r.n << ',' << r.m << ',' << r.max_degree << ',' << r.effective_delta << ',' << r.gamma_t << ','
              << r.bound << ',' << (r.extremal ? "true" : "false") << ',' << to_string(r.classification.verdict)
              << ',' << (cj["k"].is_null() ? std::string{} : std::to_string(r.classification.k)) << '\n';
        } else {
          out << to_json(r).dump() << '\n';
        }
        return kExitOk;
      });
    }
    if (*generate) {
      const auto member = generate_member(family, k);
      if (format == "edgelist") {
        write_edgelist(out, member.graph);
      } else {
        out << graph6_encode(member.graph) << '\n';
      }
      return kExitOk;
    }
    if (*enumerate) {
      for (const auto& g : enumerate_connected(enum_n)) out << graph6_encode(g) << '\n';
      return kExitOk;
    }
    if (*verify) {
      if (!*max_opt && !*in_opt) {
        err << "verify needs --max-n N or --input FILE\n";
        return kExitUsage;
      }
      const auto summary = *max_opt ? verify_enumerated(max_n, jobs) : verify_stream(*source, jobs);
      if (json) {
        out << to_json(summary).dump(2) << '\n';
      } else if (csv) {
        print_summary_csv(out, summary);
      } else {
        print_summary(out, summary);
      }
      for (const auto& e : summary.errors) err << "line " << e.line << ": " << e.message << '\n';
      err << "wall time " << summary.wall_seconds << " s\n";
      return summary.exit_code();
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace totdom
