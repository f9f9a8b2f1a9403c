// orbits: command-line front end to the orbit combinatorics library.
#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "orbits/error.hpp"
#include "orbits/json_io.hpp"

using namespace orbits;

namespace {

struct Options {
  int n = 0;
  int k = -1;
  int max_n = 0;
  bool json = false;
  bool dot = false;
  bool force = false;
  std::vector<std::string> args;
  std::string suite;
  bool all = false;
};

// Exit status for verification failures, distinct from input errors.
constexpr int kVerifyFailed = 2;

std::vector<std::string> stdin_lines() {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(std::cin, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

// One entry per job: the positional arguments when given, otherwise one job
// per stdin line with fields separated by ';'.
std::vector<std::vector<std::string>> jobs(const Options& o, std::size_t arity) {
  std::vector<std::vector<std::string>> out;
  if (!o.args.empty()) {
    if (arity == 1) {
      for (const auto& a : o.args) out.push_back({a});
    } else {
      if (o.args.size() != arity) {
        throw Error(ErrorKind::Parse, "expected " + std::to_string(arity) + " arguments, got " + std::to_string(o.args.size()));
      }
      out.push_back(o.args);
    }
    return out;
  }
  for (const auto& line : stdin_lines()) {
    std::vector<std::string> fields;
    if (arity == 1) {
      fields.push_back(line);
    } else {
      std::stringstream ss(line);
      std::string f;
      while (std::getline(ss, f, ';')) fields.push_back(f);
      if (fields.size() != arity) throw Error(ErrorKind::Parse, "expected " + std::to_string(arity) + " fields separated by ';' in '" + line + "'");
    }
    out.push_back(std::move(fields));
  }
  return out;
}

int need_n(const Options& o) {
  if (o.n < 1) throw Error(ErrorKind::Parse, "--n is required (ambient rank, n >= 1)");
  return o.n;
}

Involution inv(const Options& o, const std::string& text) { return parse_involution(text, need_n(o)); }

std::optional<int> opt_k(const Options& o) { return o.k >= 0 ? std::optional<int>(o.k) : std::nullopt; }
std::optional<int> opt_max_n(const Options& o) { return o.max_n > 0 ? std::optional<int>(o.max_n) : std::nullopt; }

// Prints one JSON value per job, wrapped in an array for batches.
void emit_json(const std::vector<json>& results) {
  if (results.size() == 1) std::cout << results.front().dump(2) << "\n";
  else std::cout << json(results).dump(2) << "\n";
}

int run_lines(const Options& o, std::size_t arity,
              const std::function<std::pair<std::string, json>(const std::vector<std::string>&)>& body) {
  std::vector<json> results;
  for (const auto& job : jobs(o, arity)) {
    auto [text, j] = body(job);
    if (o.json) results.push_back(std::move(j));
    else std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
  }
  if (o.json) emit_json(results);
  return 0;
}

std::string lines_of(const std::vector<Involution>& v) {
  std::string out;
  for (const auto& s : v) out += to_string(s) + "\n";
  return out;
}

json list_json(const std::vector<Involution>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back({{"involution", to_string(s)}, {"dim", dimension(s)}});
  return out;
}

RankMatrix matrix_arg(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("rank matrix is not valid JSON: ") + e.what());
  }
  return rank_matrix_from_json(j);
}

int cmd_verify(const Options& o) {
  std::vector<std::string> names;
  if (o.all) names = suite_names();
  else if (!o.suite.empty()) names.push_back(o.suite);
  else throw Error(ErrorKind::Parse, "verify needs --suite NAME or --all");

  bool ok = true;
  std::vector<json> reports;
  for (const auto& name : names) {
    const auto rep = verify_suite(name, o.n > 0 ? std::optional<int>(o.n) : std::nullopt, opt_k(o));
    ok = ok && rep.passed();
    if (o.json) {
      reports.push_back(report_json(rep));
      continue;
    }
    std::cout << (rep.passed() ? "PASS " : "FAIL ") << rep.suite << "  n<=" << rep.n_max << "  checks=" << rep.checks_run
              << "  failures=" << rep.failure_count << "  " << rep.elapsed_seconds << "s\n";
    for (const auto& f : rep.failures)
      std::cout << "  failure: " << f.claim << " | " << f.input << " | expected " << f.expected << " | got " << f.got << "\n";
    for (const auto& note : rep.notes) std::cout << "  note: " << note << "\n";
  }
  if (o.json) {
    if (o.all) std::cout << json(reports).dump(2) << "\n";
    else std::cout << reports.front().dump(2) << "\n";
  }
  return ok ? 0 : kVerifyFailed;
}

int cmd_hasse(const Options& o) {
  const int n = need_n(o);
  const auto edges = hasse(n, opt_k(o), opt_max_n(o));
  if (o.dot) {
    std::cout << to_dot(n, opt_k(o), edges);
  } else if (o.json) {
    json out = json::array();
    for (const auto& e : edges)
      out.push_back({{"upper", to_string(e.upper)}, {"lower", to_string(e.lower)}, {"kind", std::string(to_string(e.kind))}});
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& e : edges) std::cout << to_string(e.upper) << " -> " << to_string(e.lower) << "  " << to_string(e.kind) << "\n";
  }
  return 0;
}

int cmd_enumerate(const Options& o) {
  const auto all = enumerate_involutions(need_n(o), opt_k(o));
  if (o.json) std::cout << list_json(all).dump(2) << "\n";
  else std::cout << lines_of(all);
  return 0;
}

int dispatch(const std::string& name, const Options& o) {
  if (name == "verify") return cmd_verify(o);
  if (name == "hasse") return cmd_hasse(o);
  if (name == "enumerate") return cmd_enumerate(o);

  if (name == "dim") {
    return run_lines(o, 1, [&](const auto& a) {
      const auto s = inv(o, a[0]);
      return std::pair{std::to_string(dimension(s)), json{{"involution", to_string(s)}, {"dim", dimension(s)}}};
    });
  }
  if (name == "q") {
    return run_lines(o, 1, [&](const auto& a) {
      const auto s = inv(o, a[0]);
      const auto q = q_values(s);
      std::string text = "[";
      for (std::size_t x = 0; x < q.size(); ++x) text += (x ? "," : "") + std::to_string(q[x]);
      return std::pair{text + "]", json{{"involution", to_string(s)}, {"q", q}}};
    });
  }
  if (name == "rank") {
    return run_lines(o, 1, [&](const auto& a) {
      const auto s = inv(o, a[0]);
      const auto r = rank_matrix(s);
      json j = rank_matrix_json(r);
      j["involution"] = to_string(s);
      return std::pair{to_grid(r), j};
    });
  }
  if (name == "valid") {
    return run_lines(o, 1, [&](const auto& a) {
      const bool v = is_valid(matrix_arg(a[0]));
      return std::pair{std::string(v ? "true" : "false"), json{{"valid", v}}};
    });
  }
  if (name == "recover") {
    return run_lines(o, 1, [&](const auto& a) {
      const auto s = from_rank_matrix(matrix_arg(a[0]));
      return std::pair{to_string(s), involution_json(s)};
    });
  }
  if (name == "leq") {
    return run_lines(o, 2, [&](const auto& a) {
      const bool v = leq(inv(o, a[0]), inv(o, a[1]));
      return std::pair{std::string(v ? "true" : "false"), json{{"lower", a[0]}, {"upper", a[1]}, {"leq", v}}};
    });
  }
  if (name == "meet") {
    return run_lines(o, 2, [&](const auto& a) {
      const auto m = meet(rank_matrix(inv(o, a[0])), rank_matrix(inv(o, a[1])));
      json j = rank_matrix_json(m);
      j["valid"] = is_valid(m);
      return std::pair{to_grid(m) + (is_valid(m) ? "valid\n" : "not a rank matrix\n"), j};
    });
  }
  if (name == "desc" || name == "anc" || name == "cover") {
    return run_lines(o, 1, [&](const auto& a) {
      const auto s = inv(o, a[0]);
      auto moves = name == "desc" ? descendant_moves(s) : name == "anc" ? ancestor_moves(s) : cover_moves(s);
      std::sort(moves.begin(), moves.end(), [](const MoveOutcome& x, const MoveOutcome& y) { return x.target < y.target; });
      std::string text;
      for (const auto& m : moves) text += to_string(m.target) + "\n";
      return std::pair{text, json{{"involution", to_string(s)}, {"results", moves_json(moves)}}};
    });
  }
  if (name == "closure") {
    return run_lines(o, 1, [&](const auto& a) {
      const auto c = closure(inv(o, a[0]));
      return std::pair{lines_of(c), list_json(c)};
    });
  }
  if (name == "intersect") {
    return run_lines(o, 2, [&](const auto& a) {
      const auto r = intersect(inv(o, a[0]), inv(o, a[1]), IntersectOptions{o.force, opt_max_n(o)});
      std::string text = std::string(r.irreducible ? "irreducible" : "reducible") + "  codim " + std::to_string(r.codim) +
                         (r.outside_scope ? "  (outside theorem scope)" : "") + "\n";
      for (std::size_t x = 0; x < r.components.size(); ++x)
        text += to_string(r.components[x]) + "  dim " + std::to_string(r.component_dims[x]) + "\n";
      return std::pair{text, intersection_json(r)};
    });
  }
  if (name == "codim") {
    return run_lines(o, 2, [&](const auto& a) {
      const int c = codim(inv(o, a[0]), inv(o, a[1]));
      return std::pair{std::to_string(c), json{{"upper", a[0]}, {"lower", a[1]}, {"codim", c}}};
    });
  }
  if (name == "depth") {
    return run_lines(o, 1, [&](const auto& a) {
      const auto s = inv(o, a[0]);
      const int d = depth(s, o.k >= 0 ? o.k : 0);
      return std::pair{std::to_string(d), json{{"involution", to_string(s)}, {"k", o.k >= 0 ? o.k : 0}, {"depth", d}}};
    });
  }
  if (name == "tab2inv") {
    return run_lines(o, 1, [&](const auto& a) {
      const auto t = parse_tableau(a[0]);
      return std::pair{to_string(sigma_T(t)), tableau_json(t)};
    });
  }
  if (name == "inv2tab") {
    return run_lines(o, 1, [&](const auto& a) {
      const auto s = inv(o, a[0]);
      const auto t = tableau_of(s);
      return std::pair{t ? to_string(*t) : std::string("none"),
                       json{{"involution", to_string(s)}, {"tableau", t ? json(to_string(*t)) : json(nullptr)}}};
    });
  }
  if (name == "partners") {
    return run_lines(o, 1, [&](const auto& a) {
      const auto t = parse_tableau(a[0]);
      std::string text;
      json list = json::array();
      for (const auto& s : codim1_partners(t)) {
        text += to_string(s) + "\n";
        list.push_back(tableau_json(s));
      }
      return std::pair{text, json{{"tableau", to_string(t)}, {"partners", list}}};
    });
  }
  if (name == "change") {
    return run_lines(o, 3, [&](const auto& a) {
      const auto t = parse_tableau(a[0]);
      const auto arr = change(t, std::stoi(a[1]), std::stoi(a[2]));
      const bool ok = is_tableau(arr);
      return std::pair{to_string(arr) + (ok ? "" : "  (not a tableau)"), json{{"array", to_string(arr)}, {"is_tableau", ok}}};
    });
  }
  if (name == "rs-witness") {
    return run_lines(o, 2, [&](const auto& a) {
      const auto t = parse_tableau(a[0]);
      const auto s = parse_tableau(a[1]);
      const auto w = find_rs_witness(t, s);
      if (!w) return std::pair{std::string("none"), json{{"witness", nullptr}}};
      const auto sp = to_standard(w->p);
      return std::pair{"P=" + to_string(w->p) + " m=" + std::to_string(w->m),
                       json{{"witness", {{"P", to_string(w->p)},
                                         {"m", w->m},
                                         {"word_T", rs_word(to_standard(t), sp)},
                                         {"word_S", rs_word(to_standard(s), sp)}}}}};
    });
  }
  throw Error(ErrorKind::Parse, "unknown command " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorics of B-orbits of square-zero upper-triangular matrices"};
  app.require_subcommand(1);
  Options o;

  struct Spec {
    const char* name;
    const char* help;
    const char* args;
  };
  const std::vector<Spec> specs = {
      {"dim", "orbit dimension", "involutions"},
      {"q", "q-statistic per pair", "involutions"},
      {"rank", "rank matrix", "involutions"},
      {"valid", "is a JSON matrix a rank matrix", "JSON matrices"},
      {"leq", "closure order test: first <= second", "two involutions"},
      {"meet", "entrywise minimum of two rank matrices", "two involutions"},
      {"recover", "involution from a JSON rank matrix", "JSON matrices"},
      {"desc", "descendants (same-length covers below)", "involutions"},
      {"anc", "ancestors (same-length covers above)", "involutions"},
      {"cover", "all covers below, including pair deletions", "involutions"},
      {"closure", "everything below in the closure order", "involutions"},
      {"intersect", "components of a closure intersection", "two involutions"},
      {"codim", "codimension of the second inside the first", "two involutions"},
      {"depth", "chain length down to the minimal orbit of length --k", "involutions"},
      {"hasse", "cover relation of the whole poset", ""},
      {"tab2inv", "maximal involution of a two-column tableau", "tableaux"},
      {"inv2tab", "tableau of a maximal involution", "involutions"},
      {"partners", "tableaux meeting in codimension one", "tableaux"},
      {"change", "swap i (first column) with j (second column)", "tableau i j"},
      {"rs-witness", "search for an RS witness", "two tableaux"},
      {"verify", "run exhaustive verification suites", ""},
      {"enumerate", "list involutions", ""},
  };
  for (const auto& sp : specs) {
    auto* sub = app.add_subcommand(sp.name, sp.help);
    sub->add_option("--n", o.n, "ambient rank n");
    sub->add_option("--k", o.k, "number of pairs");
    sub->add_option("--max-n", o.max_n, "enumeration guard override");
    sub->add_flag("--json", o.json, "structured output");
    sub->add_flag("--dot", o.dot, "Graphviz output (hasse)");
    sub->add_flag("--force", o.force, "allow unequal lengths (intersect)");
    if (std::string(sp.name) == "verify") {
      sub->add_option("--suite", o.suite, "suite name")->check(CLI::IsMember(suite_names()));
      sub->add_flag("--all", o.all, "run every suite");
    } else if (*sp.args) {
      sub->add_option("inputs", o.args, std::string(sp.args) + " (stdin lines when omitted)");
    }
  }

  // CLI11 splits a bracketed argument into a list; a leading space keeps a
  // JSON matrix like "[[0,1],[0,0]]" whole, and the JSON reader ignores it.
  std::vector<std::string> args;
  for (int a = argc - 1; a >= 1; --a) {
    std::string arg = argv[a];
    if (!arg.empty() && arg.front() == '[') arg.insert(arg.begin(), ' ');
    args.push_back(std::move(arg));
  }

  try {
    app.parse(args);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    return dispatch(app.get_subcommands().front()->get_name(), o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
