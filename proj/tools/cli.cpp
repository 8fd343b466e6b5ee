#include "cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ncsym/acceptance.hpp"
#include "ncsym/decomposition.hpp"
#include "ncsym/error.hpp"
#include "ncsym/frobenius.hpp"
#include "ncsym/json_io.hpp"
#include "ncsym/series.hpp"
#include "ncsym/sym.hpp"

namespace ncsym::cli {

namespace {

class VerificationFailed : public Error {
 public:
  explicit VerificationFailed(const std::string& message) : Error("verification_failed", message) {}
};

struct Options {
  std::string format = "json";
  unsigned threads = 1;
  std::string n = "inf";
  std::string space = "ncsym";
  int d = 0;
  int prec = 8;
  std::string shape;
  std::string perm;
  std::string basis = "s";
  std::string filter = "all";
  std::string theorem = "main";
  std::string report;
  std::vector<std::string> operands;
  std::vector<std::string> factors;
  std::size_t arity = 2;
  int criterion = 0;
  bool reduced = false;
  bool integer = false;
  bool elements = false;
  bool all = false;
};

Json read_json(const std::string& operand) {
  std::string text = operand;
  if (operand.starts_with('@')) {
    std::ifstream in(operand.substr(1));
    if (!in) throw ParseError("cannot read " + operand.substr(1));
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

bool is_json_operand(const std::string& s) { return s.starts_with('@') || s.starts_with('{'); }

SetPartition standard_setpartition(const std::string& s) {
  SetPartition a = parse_setpartition(s);
  if (!a.is_standard()) throw ParseError("set partition " + s + " is not on {1..d}");
  return a;
}

NCSymElement nc_operand(const std::string& s, const Alphabet& n) {
  if (is_json_operand(s)) return ncsym_from_json(read_json(s));
  return NCSymElement::monomial(standard_setpartition(s), n);
}

SymElement sym_operand(const std::string& s, const Alphabet& n) {
  if (is_json_operand(s)) return sym_from_json(read_json(s));
  return SymElement::monomial(parse_partition(s), n);
}

std::string term_text(const Rational& c, const std::string& basis, bool first) {
  std::string sign = c < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
  Rational a = abs(c);
  return sign + (a == 1 ? "" : to_string(a) + " ") + basis;
}

std::string text(const NCSymElement& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : f.terms()) out += term_text(c, "m[" + to_string(from_rgword(w)) + "]", out.empty());
  return out;
}

std::string text(const SymElement& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [mu, c] : f.terms()) out += term_text(c, "m[" + to_string(mu) + "]", out.empty());
  return out;
}

template <class Element>
void emit(const Options& opt, std::ostream& out, const Element& f) {
  if (opt.format == "text")
    out << text(f) << '\n';
  else
    out << to_json(f).dump() << '\n';
}

template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned threads, const std::function<T(std::size_t)>& fn) {
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        slots[i].emplace(fn(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<T> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

Json words_json(const std::vector<RGWord>& words) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(to_string(w));
  return out;
}

RGWord word_operand(const std::string& s) {
  if (s.find('/') != std::string::npos || s.find('.') != std::string::npos)
    return to_rgword(standard_setpartition(s));
  return parse_rgword(s);
}

void cmd_partitions(const Options& opt, std::ostream& out) {
  Alphabet n = parse_alphabet(opt.n);
  Json list = Json::array();
  if (opt.integer) {
    for (const auto& mu : enumerate_partitions(opt.d, n.cap(static_cast<std::size_t>(std::max(opt.d, 0)))))
      list.push_back(to_string(mu));
  } else if (!opt.shape.empty()) {
    IntPartition mu = parse_partition(opt.shape);
    if (mu.weight() != opt.d && opt.d != 0) throw PreconditionError("shape does not have weight d");
    if (n.admits(mu.length()))
      for (const auto& a : setpartitions_of_shape(mu)) list.push_back(to_string(a));
  } else {
    for (const auto& a : enumerate_setpartitions(opt.d, n)) list.push_back(to_string(a));
  }
  out << list.dump() << '\n';
}

void cmd_words(const Options& opt, std::ostream& out) {
  std::function<bool(const RGWord&)> keep;
  if (opt.filter == "all")
    keep = [](const RGWord&) { return true; };
  else if (opt.filter == "tail-free")
    keep = is_tail_free;
  else if (opt.filter == "bimodal")
    keep = is_bimodal;
  else if (opt.filter == "primary")
    keep = is_primary;
  else if (opt.filter == "convex")
    keep = is_convex;
  else
    throw ParseError("unknown filter " + opt.filter);
  std::vector<RGWord> words;
  for (const auto& w : enumerate_rgwords(opt.d, parse_alphabet(opt.n)))
    if (keep(w)) words.push_back(w);
  out << words_json(words).dump() << '\n';
}

void cmd_mul(const Options& opt, std::ostream& out) {
  Alphabet n = parse_alphabet(opt.n);
  if (opt.space == "sym") {
    SymElement acc = sym_operand(opt.operands.front(), n);
    for (std::size_t i = 1; i < opt.operands.size(); ++i) acc = multiply(acc, sym_operand(opt.operands[i], n));
    emit(opt, out, acc);
  } else {
    NCSymElement acc = nc_operand(opt.operands.front(), n);
    for (std::size_t i = 1; i < opt.operands.size(); ++i) acc = multiply(acc, nc_operand(opt.operands[i], n));
    emit(opt, out, acc);
  }
}

void cmd_comul(const Options& opt, std::ostream& out) {
  Alphabet n = parse_alphabet(opt.n);
  const std::string& operand = opt.operands.front();
  if (opt.space == "sym") {
    if (opt.reduced || opt.arity != 2) throw PreconditionError("--reduced and --arity apply to ncsym only");
    SymElement f = sym_operand(operand, n);
    out << to_json(coproduct(f), f.alphabet()).dump() << '\n';
    return;
  }
  NCSymElement f = nc_operand(operand, n);
  if (opt.arity < 1) throw PreconditionError("--arity must be positive");
  Tensor t = opt.reduced || opt.arity != 2 ? iterate_reduced(f, opt.arity) : coproduct(f);
  out << to_json(t).dump() << '\n';
}

void cmd_primitive(const Options& opt, std::ostream& out) {
  Primitive p = compute_primitive(standard_setpartition(opt.operands.front()));
  out << Json{{"element", to_json(p.element)}, {"solution_dimension", p.solution_dimension}}.dump() << '\n';
}

void cmd_kernel_basis(const Options& opt, std::ostream& out) {
  IntPartition mu = parse_partition(opt.shape);
  DegreeBasis b = hopf_kernel_basis(mu);
  Json basis = Json::array();
  for (const auto& h : b.elements()) basis.push_back(to_json(h));
  out << Json{{"shape", to_string(mu)}, {"dimension", b.dimension()}, {"basis", std::move(basis)}}.dump() << '\n';
}

void cmd_cbasis(const Options& opt, std::ostream& out) {
  Alphabet n = parse_alphabet(opt.n);
  auto words = cosym_word_basis(opt.d, n);
  if (!opt.elements) {
    out << words_json(words).dump() << '\n';
    return;
  }
  Json list = Json::array();
  for (const auto& w : words) list.push_back({{"word", to_string(w)}, {"element", to_json(cosym_element(w, n))}});
  out << list.dump() << '\n';
}

void cmd_phi(const Options& opt, std::ostream& out) {
  std::vector<RGWord> factors;
  for (const auto& f : opt.factors) factors.push_back(word_operand(f));
  SetPartition a = phi(factors, parse_partition(opt.shape), parse_alphabet(opt.n));
  out << Json{{"sp", to_string(a)}, {"word", to_string(to_rgword(a))}}.dump() << '\n';
}

void cmd_decompose(const Options& opt, std::ostream& out) {
  RGWord w = word_operand(opt.operands.front());
  BimodalDecomposition dec = bimodal_decompose(w);
  Json atomic = Json::array();
  for (const auto& a : atomic_splitting(from_rgword(w))) atomic.push_back(to_string(a));
  out << Json{{"word", to_string(w)},
              {"sp", to_string(from_rgword(w))},
              {"bimodal", {{"factors", words_json(dec.factors)}, {"tail", to_string(dec.tail)}}},
              {"tail_free", dec.tail.empty()},
              {"primary", words_json(primary_splitting(w))},
              {"atomic", std::move(atomic)}}
             .dump()
      << '\n';
}

void cmd_hilbert(const Options& opt, std::ostream& out) {
  Alphabet n = parse_alphabet(opt.n);
  if (opt.prec < 0) throw PreconditionError("--prec must be nonnegative");
  TruncSeries s(opt.prec);
  if (opt.space == "ncsym") {
    s = hilb_ncsym(n, opt.prec);
  } else if (opt.space == "sym") {
    s = hilb_sym(n, opt.prec);
  } else if (opt.space == "cosym") {
    s = hilb_cosym(n, opt.prec);
  } else if (opt.space == "coinv") {
    TruncSeries poly = coinvariant_poly(n);
    for (int k = 0; k <= opt.prec && k <= poly.precision(); ++k) s[k] = poly[k];
  } else {
    throw ParseError("unknown space " + opt.space);
  }
  out << to_json(s).dump() << '\n';
}

void cmd_shape_hilbert(const Options& opt, std::ostream& out) {
  Alphabet n = parse_alphabet(opt.n);
  if (opt.d < 0) throw PreconditionError("--d must be nonnegative");
  ShapePoly p(opt.d);
  if (opt.space == "ncsym") {
    p = shape_hilb_ncsym(opt.d, n);
  } else if (opt.space == "sym") {
    ShapePoly all = shape_hilb_sym(opt.d).weight_component(opt.d);
    for (const auto& [mu, c] : all.terms())
      if (n.admits(mu.length())) p.add_term(mu, c);
  } else if (opt.space == "cosym") {
    if (!n.is_infinite()) throw PreconditionError("the shape series of the coinvariants is defined for --n inf");
    p = shape_hilb_cosym_inf(opt.d).weight_component(opt.d);
  } else {
    throw ParseError("unknown space " + opt.space);
  }
  out << to_json(p).dump() << '\n';
}

void cmd_frob(const Options& opt, std::ostream& out) {
  PExpansion f = frob_shape(parse_partition(opt.shape));
  if (opt.basis == "p")
    out << to_json(f).dump() << '\n';
  else if (opt.basis == "s")
    out << to_json(p_to_schur(f)).dump() << '\n';
  else
    throw ParseError("unknown basis " + opt.basis);
}

void write_report(const Options& opt, const Json& report, std::ostream& out) {
  out << report.dump() << '\n';
  if (opt.report.empty()) return;
  std::ofstream file(opt.report);
  if (!file) throw PreconditionError("cannot write " + opt.report);
  file << report.dump(2) << '\n';
}

void verify_all(const Options& opt, std::ostream& out) {
  std::vector<int> ids;
  if (opt.criterion)
    ids.push_back(opt.criterion);
  else
    for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
  auto results = parallel_map<CriterionResult>(ids.size(), opt.threads,
                                               [&](std::size_t i) { return run_criterion(ids[i]); });
  Json report = Json::array();
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.id << "  " << r.name << ": " << r.detail << '\n';
    report.push_back({{"criterion", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    failed += !r.passed;
  }
  write_report(opt, report, out);
  if (failed) throw VerificationFailed(std::to_string(failed) + " acceptance criteria failed");
}

void verify_main(const Options& opt, std::ostream& out) {
  Alphabet n = parse_alphabet(opt.n);
  if (opt.d < 0) throw PreconditionError("--max-degree must be nonnegative");
  auto reports = parallel_map<TensorIsoReport>(static_cast<std::size_t>(opt.d) + 1, opt.threads, [&](std::size_t d) {
    return verify_tensor_iso(static_cast<int>(d), n);
  });

  out << "degree  expected  candidates  rank  result\n";
  Json rows = Json::array();
  bool all_passed = true;
  for (const auto& r : reports) {
    out << std::setw(6) << r.degree << std::setw(10) << r.expected_dim << std::setw(12) << r.candidate_count
        << std::setw(6) << r.rank << "  " << (r.passed ? "PASS" : "FAIL") << '\n';
    rows.push_back({{"degree", r.degree},
                    {"shape", nullptr},
                    {"expected_dim", r.expected_dim},
                    {"computed_dim", r.candidate_count},
                    {"rank", r.rank},
                    {"phi_bijective", r.phi_bijective},
                    {"leading_terms_match", r.leading_terms_match},
                    {"passed", r.passed}});
    for (const auto& s : r.kernel_shapes) {
      if (s.shape.weight() != r.degree) continue;
      out << "        shape " << (s.shape.length() ? to_string(s.shape) : "0") << ": kernel dimension "
          << s.computed_dim << " (expected " << s.expected_dim << ")"
          << (s.computed_dim == s.expected_dim ? "" : "  FAIL") << '\n';
      rows.push_back({{"degree", s.degree},
                      {"shape", to_string(s.shape)},
                      {"expected_dim", s.expected_dim},
                      {"computed_dim", s.computed_dim},
                      {"rank", s.computed_dim},
                      {"passed", s.computed_dim == s.expected_dim}});
    }
    all_passed = all_passed && r.passed;
  }
  out << (all_passed ? "PASS" : "FAIL") << '\n';
  write_report(opt, Json{{"theorem", "main"}, {"alphabet", to_string(n)}, {"passed", all_passed}, {"rows", rows}},
               out);
  if (!all_passed) throw VerificationFailed("tensor decomposition not certified");
}

void cmd_verify(const Options& opt, std::ostream& out) {
  if (opt.all || opt.criterion) return verify_all(opt, out);
  if (opt.theorem != "main") throw ParseError("unknown theorem " + opt.theorem);
  verify_main(opt, out);
}

void error_line(std::ostream& err, const std::string& code, const std::string& message) {
  err << Json{{"error", code}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Symmetric functions in noncommuting variables", "ncsym-cli"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format for elements")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", opt.threads, "Worker threads for verify")->check(CLI::PositiveNumber);

  std::function<void(const Options&, std::ostream&)> command;
  auto sub = [&](const char* name, const char* help, void (*fn)(const Options&, std::ostream&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&command, fn] { command = fn; });
    return s;
  };
  auto alphabet = [&](CLI::App* s) { s->add_option("--n", opt.n, "Number of variables, or inf"); };
  auto space = [&](CLI::App* s, std::vector<std::string> allowed) {
    s->add_option("--space", opt.space)->check(CLI::IsMember(allowed));
  };

  auto* s = sub("partitions", "Set partitions of [d] (or integer partitions with --integer)", cmd_partitions);
  s->add_option("--d", opt.d)->required();
  s->add_option("--shape", opt.shape, "Only set partitions of this shape");
  s->add_flag("--integer", opt.integer);
  alphabet(s);

  s = sub("words", "Restricted growth words of length d", cmd_words);
  s->add_option("--d", opt.d)->required();
  s->add_option("--filter", opt.filter)->check(CLI::IsMember({"all", "tail-free", "bimodal", "primary", "convex"}));
  alphabet(s);

  s = sub("mul", "Product of one or more operands", cmd_mul);
  space(s, {"ncsym", "sym"});
  alphabet(s);
  s->add_option("operands", opt.operands, "Set partitions, partitions, or @file.json")->required();

  s = sub("comul", "Coproduct", cmd_comul);
  space(s, {"ncsym", "sym"});
  s->add_flag("--reduced", opt.reduced);
  s->add_option("--arity", opt.arity, "Tensor arity of the iterated reduced coproduct");
  alphabet(s);
  s->add_option("operand", opt.operands)->required()->expected(1);

  s = sub("ab", "Abelianization", [](const Options& o, std::ostream& out) {
    emit(o, out, abelianize(nc_operand(o.operands.front(), parse_alphabet(o.n))));
  });
  alphabet(s);
  s->add_option("operand", opt.operands)->required()->expected(1);

  s = sub("iota", "Lift of a symmetric function to the invariants", [](const Options& o, std::ostream& out) {
    emit(o, out, iota(sym_operand(o.operands.front(), parse_alphabet(o.n))));
  });
  alphabet(s);
  s->add_option("operand", opt.operands)->required()->expected(1);

  s = sub("mbold", "Place-action invariant for a partition", [](const Options& o, std::ostream& out) {
    emit(o, out, m_bold(parse_partition(o.operands.front()), parse_alphabet(o.n)));
  });
  alphabet(s);
  s->add_option("partition", opt.operands)->required()->expected(1);

  s = sub("act", "Place action of a permutation", [](const Options& o, std::ostream& out) {
    emit(o, out, place_act(nc_operand(o.operands.front(), parse_alphabet(o.n)), parse_permutation(o.perm)));
  });
  s->add_option("--perm", opt.perm, "Image list, e.g. 2,1,3")->required();
  alphabet(s);
  s->add_option("operand", opt.operands)->required()->expected(1);

  s = sub("primitive", "Primitive element for an atomic set partition", cmd_primitive);
  s->add_option("setpartition", opt.operands)->required()->expected(1);

  s = sub("kernel-basis", "Basis of the Hopf kernel in one shape", cmd_kernel_basis);
  s->add_option("--shape", opt.shape)->required();

  s = sub("cbasis", "Tail-free word basis of the coinvariants", cmd_cbasis);
  s->add_option("--d", opt.d)->required();
  s->add_flag("--elements", opt.elements, "Also print the product of bimodal monomials");
  alphabet(s);

  s = sub("phi", "Word of a tail-free factor list followed by a convex tail", cmd_phi);
  s->add_option("--factor", opt.factors, "Bimodal factor, repeatable");
  s->add_option("--shape", opt.shape)->required();
  alphabet(s);

  s = sub("decompose", "Bimodal, primary and atomic splittings of a word", cmd_decompose);
  s->add_option("word", opt.operands)->required()->expected(1);

  s = sub("hilbert", "Hilbert series coefficients", cmd_hilbert);
  space(s, {"ncsym", "sym", "cosym", "coinv"});
  s->add_option("--prec", opt.prec);
  alphabet(s);

  s = sub("shape-hilbert", "Shape-graded dimensions in degree d", cmd_shape_hilbert);
  space(s, {"ncsym", "sym", "cosym"});
  s->add_option("--d", opt.d)->required();
  alphabet(s);

  s = sub("frob", "Frobenius characteristic of a shape component", cmd_frob);
  s->add_option("--shape", opt.shape)->required();
  s->add_option("--basis", opt.basis)->check(CLI::IsMember({"s", "p"}));

  s = sub("verify", "Certify the tensor decomposition or run the acceptance suite", cmd_verify);
  s->add_option("--theorem", opt.theorem, "Only \"main\" is supported");
  s->add_option("--max-degree", opt.d, "Check degrees 0..d");
  s->add_option("--report", opt.report, "Also write the JSON report to this file");
  s->add_flag("--all", opt.all, "Run every acceptance criterion");
  s->add_option("--criterion", opt.criterion)->check(CLI::Range(1, kCriterionCount));
  alphabet(s);

  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--format" || arg == "--threads") {
      ++i;
      continue;
    }
    if (arg.starts_with('-')) continue;
    if (!app.get_subcommand_no_throw(arg)) {
      error_line(err, "unknown_subcommand", "unknown subcommand '" + arg + "'");
      return kUsage;
    }
    break;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    error_line(err, "usage", e.what());
    return kUsage;
  }

  try {
    command(opt, out);
    return kOk;
  } catch (const VerificationFailed& e) {
    error_line(err, e.code(), e.what());
    return kVerificationFailed;
  } catch (const NegativeCoefficient& e) {
    error_line(err, e.code(), e.what());
    return kVerificationFailed;
  } catch (const InternalError& e) {
    error_line(err, e.code(), e.what());
    return kInternal;
  } catch (const Error& e) {
    error_line(err, e.code(), e.what());
    return kUsage;
  } catch (const std::exception& e) {
    error_line(err, "internal", e.what());
    return kInternal;
  }
}

}  // namespace ncsym::cli
