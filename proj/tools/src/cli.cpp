#include "soficonv_cli/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "soficonv/automata.hpp"
#include "soficonv/bernoulli.hpp"
#include "soficonv/error.hpp"
#include "soficonv/json_io.hpp"
#include "soficonv/pisot.hpp"
#include "soficonv/sofic.hpp"
#include "soficonv/spectrum.hpp"

namespace soficonv::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t state_cap = pisot::kDefaultStateCap;
  int precision = 15;
};

std::string fmt_double(double x, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x);
  return buf;
}

json num(double x, int precision) { return json::parse(fmt_double(x, precision)); }

json rationals(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json rational_matrix(const RationalMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(rationals(m.row(i)));
  return a;
}

json integer_matrix(const IntegerMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json::parse(m(i, j).get_str()));
    a.push_back(row);
  }
  return a;
}

json with_schema(json doc) {
  doc["schema"] = io::kSchema;
  return doc;
}

std::string read_text(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + arg + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << text;
}

RationalVector parse_probabilities(const std::string& text, int d) {
  if (text.empty()) return RationalVector(static_cast<std::size_t>(d), Rational(1, d));
  RationalVector p;
  for (const auto& s : split_list(text)) p.push_back(parse_rational(s));
  return p;
}

std::vector<int> parse_word(const std::string& text) { return text.empty() ? std::vector<int>{} : parse_digits(text); }

// ---- pisot base selection -------------------------------------------------

struct BaseOptions {
  std::string minpoly;  // highest degree first
  std::string interval;
  std::string descriptor;
  std::string preset;
  int d = 0;  // 0 selects ceil(beta)
};

FieldDescriptor descriptor_of(const BaseOptions& o) {
  if (!o.descriptor.empty()) return io::descriptor_from_json(read_text(o.descriptor));
  if (!o.preset.empty()) {
    if (o.preset == "golden") return {{Integer(-1), Integer(-1), Integer(1)}, Rational(3, 2), Rational(17, 10)};
    if (o.preset == "beta3") return {{Integer(1), Integer(-3), Integer(1)}, Rational(5, 2), Rational(27, 10)};
    return FieldDescriptor::integer_base(parse_integer(o.preset).get_si());
  }
  if (o.minpoly.empty() || o.interval.empty()) {
    throw Error(ErrorCode::ParseError, "give --base, --descriptor, or both --minpoly and --interval");
  }
  FieldDescriptor d;
  for (const auto& c : split_list(o.minpoly)) d.minpoly.push_back(parse_integer(c));
  std::reverse(d.minpoly.begin(), d.minpoly.end());
  auto iv = split_list(o.interval);
  if (iv.size() != 2) throw Error(ErrorCode::ParseError, "--interval takes lo,hi");
  d.lo = parse_rational(iv[0]);
  d.hi = parse_rational(iv[1]);
  return d;
}

void add_base_options(CLI::App* cmd, BaseOptions& o) {
  cmd->add_option("--minpoly", o.minpoly,
                  "Integer coefficients of the monic minimal polynomial, highest degree first (1,-1,-1 is x^2-x-1)");
  cmd->add_option("--interval", o.interval, "Isolating interval lo,hi of the root beta > 1 (decimals or p/q)");
  cmd->add_option("--descriptor", o.descriptor, "Field descriptor JSON (file or inline)");
  cmd->add_option("--base", o.preset, "Preset base: golden, beta3 (beta^2 = 3 beta - 1) or an integer");
  cmd->add_option("--d", o.d, "Digit count (default ceil(beta))");
}

json state_list(const std::vector<FieldElement>& states, int precision) {
  json a = json::array();
  for (std::size_t i = 0; i < states.size(); ++i) {
    json s;
    s["index"] = i;
    s["value"] = states[i].to_string();
    json coeffs = json::array();
    for (const auto& c : states[i].coeffs()) coeffs.push_back(to_string(c));
    s["coeffs"] = coeffs;
    s["approx"] = num(states[i].approx(), precision);
    a.push_back(s);
  }
  return a;
}

// ---- automata sources -----------------------------------------------------

automata::LabeledGraph graph_of(const std::string& spec) {
  if (spec == "even-gap") return automata::fixtures::even_gap_automaton();
  if (spec == "cover") return automata::fixtures::even_gap_cover();
  if (spec == "three-letter") return automata::fixtures::three_letter_markov_graph();
  return io::graph_from_json(read_text(spec));
}

std::map<char, char> letter_map_of(const std::string& text) {
  std::map<char, char> psi;
  for (const auto& item : split_list(text)) {
    auto colon = item.find(':');
    if (colon != 1 || item.size() != 3) throw Error(ErrorCode::ParseError, "map entries look like a:0");
    psi[item[0]] = item[2];
  }
  return psi;
}

// even-gap | cover:<map> | three-letter[:map] | full:<letters> | graph file [:: map]
automata::WordSource source_of(const std::string& spec) {
  if (spec.rfind("full:", 0) == 0) return automata::full_shift(spec.substr(5));
  auto sep = spec.find("::");
  if (sep != std::string::npos) {
    return automata::image_language(graph_of(spec.substr(0, sep)), letter_map_of(spec.substr(sep + 2)), spec);
  }
  if (spec == "three-letter") {
    return automata::image_language(automata::fixtures::three_letter_markov_graph(),
                                    automata::fixtures::three_letter_projection(), spec);
  }
  return automata::factor_language(graph_of(spec), spec);
}

// ---- output ---------------------------------------------------------------

class Printer {
 public:
  Printer(std::ostream& out, const Config& cfg) : out_(out), cfg_(cfg) {}
  void json_doc(const json& doc) { out_ << with_schema(doc).dump() << "\n"; }
  void raw(const std::string& text) { out_ << text; }
  const Config& cfg() const { return cfg_; }

 private:
  std::ostream& out_;
  const Config& cfg_;
};

std::string density_csv(const spectrum::DensityProfile& p, int precision) {
  std::ostringstream os;
  os << "N,count,d_minus,d_plus,dexp_minus,dexp_plus\n";
  Rational dmin, dmax;
  double emin = 0, emax = 0;
  bool first = true;
  for (const auto& c : p.series) {
    Rational d(Integer(std::to_string(c.count)), Integer(std::to_string(c.N)));
    d.canonicalize();
    double e = spectrum::exponential_density(c.count, c.N);
    if (first) {
      dmin = dmax = d;
      emin = emax = e;
      first = false;
    } else {
      dmin = std::min(dmin, d);
      dmax = std::max(dmax, d);
      emin = std::min(emin, e);
      emax = std::max(emax, e);
    }
    os << c.N << "," << c.count << "," << to_string(dmin) << "," << to_string(dmax) << ","
       << fmt_double(emin, precision) << "," << fmt_double(emax, precision) << "\n";
  }
  return os.str();
}

json density_json(const spectrum::DensityProfile& p, int precision) {
  json doc;
  doc["horizon"] = p.horizon;
  doc["count"] = p.count;
  doc["d_minus"] = to_string(p.d_minus);
  doc["d_plus"] = to_string(p.d_plus);
  doc["dexp_minus"] = num(p.dexp_minus, precision);
  doc["dexp_plus"] = num(p.dexp_plus, precision);
  doc["d_at_horizon"] = to_string(p.d_at_horizon);
  doc["dexp_at_horizon"] = num(p.dexp_at_horizon, precision);
  json series = json::array();
  for (const auto& c : p.series) series.push_back({c.N, c.count});
  doc["series"] = series;
  return doc;
}

// ---- subcommand registration ---------------------------------------------

using Action = std::function<void(Printer&)>;

struct Registry {
  std::vector<std::pair<CLI::App*, Action>> actions;
  void add(CLI::App* cmd, Action a) { actions.emplace_back(cmd, std::move(a)); }
};

void register_sofic(CLI::App& app, Registry& reg) {
  auto* grp = app.add_subcommand("sofic", "Markov measures and linear representations");
  grp->require_subcommand(1);

  struct Opts {
    std::string linrep, markov, word, map;
  };
  auto o = std::make_shared<Opts>();

  auto* cyl = grp->add_subcommand("cylinder", "Cylinder value of a word");
  cyl->add_option("--linrep", o->linrep, "Linear representation JSON (file or inline)");
  cyl->add_option("--markov", o->markov, "Markov measure JSON (file or inline)");
  cyl->add_option("--word", o->word, "Word over {0..b-1}")->required();
  reg.add(cyl, [o](Printer& pr) {
    Rational v;
    const auto w = parse_word(o->word);
    if (!o->linrep.empty()) {
      v = sofic::linrep_cylinder(io::linrep_from_json(read_text(o->linrep)), w);
    } else if (!o->markov.empty()) {
      auto m = io::markov_from_json(read_text(o->markov));
      m.validate();
      v = sofic::markov_cylinder(m, w);
    } else {
      throw Error(ErrorCode::ParseError, "give --linrep or --markov");
    }
    pr.json_doc({{"word", o->word}, {"value", to_string(v)}});
  });

  auto* tolin = grp->add_subcommand("to-linear", "Markov measure to linear representation");
  tolin->add_option("--markov", o->markov, "Markov measure JSON")->required();
  reg.add(tolin, [o](Printer& pr) {
    auto m = io::markov_from_json(read_text(o->markov));
    pr.raw(io::linrep_to_json(sofic::markov_to_linear(m)) + "\n");
  });

  auto* tomk = grp->add_subcommand("to-markov", "Linear representation to Markov measure and letter map");
  tomk->add_option("--linrep", o->linrep, "Linear representation JSON")->required();
  reg.add(tomk, [o](Printer& pr) {
    auto cover = sofic::linear_to_markov(io::linrep_from_json(read_text(o->linrep)));
    json doc;
    doc["markov"] = json::parse(io::markov_to_json(cover.markov));
    doc["markov"].erase("schema");
    doc["projection"] = cover.projection.image;
    pr.json_doc(doc);
  });

  auto* push = grp->add_subcommand("push", "Image of a linear representation under a letter map");
  push->add_option("--linrep", o->linrep, "Linear representation JSON")->required();
  push->add_option("--map", o->map, "Images of letters 0..b-1, e.g. 0,0,1")->required();
  reg.add(push, [o](Printer& pr) {
    std::vector<int> image;
    for (const auto& s : split_list(o->map)) image.push_back(static_cast<int>(parse_integer(s).get_si()));
    auto lr = sofic::push_forward(io::linrep_from_json(read_text(o->linrep)), sofic::LetterMap::from_image(image));
    pr.raw(io::linrep_to_json(lr) + "\n");
  });

  auto* stat = grp->add_subcommand("stationary", "Sufficient shift-invariance test");
  stat->add_option("--linrep", o->linrep, "Linear representation JSON")->required();
  reg.add(stat, [o](Printer& pr) {
    auto lr = io::linrep_from_json(read_text(o->linrep));
    lr.validate();
    pr.json_doc({{"stationary", sofic::is_stationary(lr)}});
  });
}

void register_bernoulli(CLI::App& app, Registry& reg) {
  auto* grp = app.add_subcommand("bernoulli", "Bernoulli convolutions in integer base");
  grp->require_subcommand(1);

  struct Opts {
    int b = 2, d = 3, q = 0, k = -1;
    std::string p, digits, n, word;
  };
  auto o = std::make_shared<Opts>();
  auto common = [o](CLI::App* cmd) {
    cmd->add_option("--b", o->b, "Base")->capture_default_str();
    cmd->add_option("--d", o->d, "Digit count")->capture_default_str();
    cmd->add_option("--p", o->p, "Digit probabilities p0,...,p_{d-1} (default uniform)");
  };
  auto spec_of = [o] {
    bernoulli::BernoulliSpec s;
    s.b = o->b;
    s.d = o->d;
    s.p = parse_probabilities(o->p, o->d);
    s.validate();
    return s;
  };

  auto* mats = grp->add_subcommand("matrices", "Matrices M_j and eigenvector C");
  common(mats);
  reg.add(mats, [spec_of](Printer& pr) {
    bernoulli::BernoulliMeasure m(spec_of());
    json M = json::array();
    for (const auto& x : m.matrices()) M.push_back(rational_matrix(x));
    pr.json_doc({{"b", m.spec().b}, {"d", m.spec().d}, {"a", m.spec().a()}, {"M", M}, {"C", rationals(m.C())}});
  });

  auto* meas = grp->add_subcommand("measure", "Mass of q + I for the b-adic interval of a digit word");
  common(meas);
  meas->add_option("--q", o->q, "Integer translation in 0..a")->capture_default_str();
  meas->add_option("--digits", o->digits, "Digits e1...ek over {0..b-1}")->required();
  reg.add(meas, [o, spec_of](Printer& pr) {
    bernoulli::BernoulliMeasure m(spec_of());
    pr.json_doc({{"q", o->q}, {"digits", o->digits}, {"value", to_string(m.interval_measure(o->q, parse_word(o->digits)))}});
  });

  auto* cnt = grp->add_subcommand("count", "Number of representations of n with digits {0..d-1}");
  cnt->add_option("--b", o->b, "Base")->capture_default_str();
  cnt->add_option("--d", o->d, "Digit count")->capture_default_str();
  cnt->add_option("--n", o->n, "Nonnegative integer")->required();
  cnt->add_option("--k", o->k, "Exactly k digit positions");
  reg.add(cnt, [o](Printer& pr) {
    const Integer n = parse_integer(o->n);
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be nonnegative");
    Integer c = o->k >= 0 ? bernoulli::count_representations_k(n, o->k, o->b, o->d)
                          : bernoulli::count_representations(n, o->b, o->d);
    pr.raw(c.get_str() + "\n");
  });

  auto* norm = grp->add_subcommand("normalize", "Canonical base-b digits of a digit word");
  norm->add_option("--b", o->b, "Base")->capture_default_str();
  norm->add_option("--d", o->d, "Digit count")->capture_default_str();
  norm->add_option("--digits", o->digits, "Digits over {0..d-1}, most significant first")->required();
  reg.add(norm, [o](Printer& pr) {
    auto out = bernoulli::normalize_digits(parse_word(o->digits), o->b, o->d);
    pr.json_doc({{"input", o->digits}, {"output", format_digits(out)}});
  });

  auto* exp = grp->add_subcommand("export", "Markov chain whose letter image is the reversed-word measure");
  common(exp);
  reg.add(exp, [spec_of](Printer& pr) {
    auto ex = bernoulli::symbolic_markov_export(spec_of());
    pr.json_doc({{"P", rational_matrix(ex.markov.P)},
                 {"initial", rationals(ex.markov.p)},
                 {"projection", ex.projection.image},
                 {"block_initial", rationals(ex.block_initial)},
                 {"block_initial_scale", ex.block_initial_scale}});
  });

  auto* table = grp->add_subcommand("table", "d^k M_w as an integer matrix of representation counts");
  common(table);
  table->add_option("--word", o->word, "Digits e1...ek over {0..b-1}")->required();
  reg.add(table, [o, spec_of](Printer& pr) {
    pr.json_doc({{"word", o->word}, {"table", integer_matrix(bernoulli::matrix_count_table(spec_of(), parse_word(o->word)))}});
  });
}

void register_pisot(CLI::App& app, Registry& reg) {
  auto* grp = app.add_subcommand("pisot", "Pisot-base carries, transducers and measures");
  grp->require_subcommand(1);

  struct Opts {
    BaseOptions base;
    std::string window = "half-open";
    std::string dot, word, p;
    std::size_t state = 0;
  };
  auto o = std::make_shared<Opts>();
  auto with_window = [o](CLI::App* cmd) {
    cmd->add_option("--window", o->window, "half-open (-1,alpha], open (-1,alpha) or symmetric (-alpha,alpha)")
        ->capture_default_str();
  };
  auto base_of = [o] {
    const auto desc = descriptor_of(o->base);
    int d = o->base.d;
    if (d == 0) {
      const auto beta = NumberField::create(desc)->beta();
      const auto exact = beta.as_integer();
      d = static_cast<int>((exact ? *exact : beta.floor() + 1).get_si());
    }
    return pisot::PisotBase::create(desc, d);
  };

  auto* states = grp->add_subcommand("states", "Carry-state closure");
  add_base_options(states, o->base);
  with_window(states);
  reg.add(states, [o, base_of](Printer& pr) {
    auto b = base_of();
    auto w = pisot::parse_window(o->window);
    auto s = pisot::carry_states(b, w, pr.cfg().state_cap);
    pr.json_doc({{"window", pisot::window_name(w)}, {"states", state_list(s, pr.cfg().precision)}});
  });

  auto* tr = grp->add_subcommand("transducer", "Carry transducer");
  add_base_options(tr, o->base);
  with_window(tr);
  tr->add_option("--dot", o->dot, "Also write Graphviz DOT to this file");
  reg.add(tr, [o, base_of](Printer& pr) {
    auto t = pisot::build_transducer(base_of(), pisot::parse_window(o->window), pr.cfg().state_cap);
    if (!o->dot.empty()) write_file(o->dot, io::transducer_to_dot(t));
    if (pr.cfg().format == "dot") {
      pr.raw(io::transducer_to_dot(t));
    } else {
      pr.raw(io::transducer_to_json(t) + "\n");
    }
  });

  auto* quasi = grp->add_subcommand("quasi", "Quasi-expansion of 1");
  add_base_options(quasi, o->base);
  reg.add(quasi, [base_of](Printer& pr) {
    auto q = pisot::quasi_expansion(base_of());
    pr.json_doc({{"digits", format_digits(q.digits)}, {"T", q.period()}});
  });

  auto* words = grp->add_subcommand("words", "The prefix-free word set W");
  add_base_options(words, o->base);
  reg.add(words, [base_of](Printer& pr) {
    json a = json::array();
    for (const auto& w : pisot::word_set(base_of())) a.push_back(format_digits(w));
    pr.json_doc({{"W", a}});
  });

  auto* adm = grp->add_subcommand("admissible", "Parry admissibility of a digit word");
  add_base_options(adm, o->base);
  adm->add_option("--word", o->word, "Digit word")->required();
  reg.add(adm, [o, base_of](Printer& pr) {
    pr.json_doc({{"word", o->word}, {"admissible", pisot::is_admissible(parse_word(o->word), base_of())}});
  });

  auto* cnt = grp->add_subcommand("count", "Number of digit words over {0..d-1} with the same value");
  add_base_options(cnt, o->base);
  cnt->add_option("--word", o->word, "Digit word over {0..d-1}")->required();
  reg.add(cnt, [o, base_of](Printer& pr) {
    pr.raw(pisot::count_redundant(parse_word(o->word), base_of(), pr.cfg().state_cap).get_str() + "\n");
  });

  auto* norm = grp->add_subcommand("normalize", "Admissible expansion of 0.w1w2...wh");
  add_base_options(norm, o->base);
  norm->add_option("--word", o->word, "Digit word over {0..d-1}")->required();
  reg.add(norm, [o, base_of](Printer& pr) {
    auto nf = pisot::normalize_pisot(parse_word(o->word), base_of(), 1000, pr.cfg().state_cap);
    pr.json_doc({{"input", o->word},
                 {"integer", format_digits(nf.integer_part)},
                 {"fractional", format_digits(nf.fractional_part)},
                 {"shift", nf.shift()},
                 {"normal", nf.to_string()}});
  });

  auto* meas = grp->add_subcommand("measure", "Matrices of the Bernoulli convolution and interval masses");
  add_base_options(meas, o->base);
  meas->add_option("--p", o->p, "Digit probabilities (default uniform)");
  meas->add_option("--state", o->state, "State index i for the translation j_i")->capture_default_str();
  meas->add_option("--word", o->word, "Concatenation of W-words");
  reg.add(meas, [o, base_of](Printer& pr) {
    auto b = base_of();
    auto pm = pisot::measure_matrices(b, parse_probabilities(o->p, b.d), pr.cfg().state_cap);
    json doc;
    doc["states"] = state_list(pm.states, pr.cfg().precision);
    json M = json::array();
    for (const auto& m : pm.M) M.push_back(rational_matrix(m));
    doc["M"] = M;
    json W = json::array();
    for (const auto& w : pm.w_set) W.push_back(format_digits(w));
    doc["W"] = W;
    doc["C"] = rationals(pm.C);
    doc["scale"] = pm.absolute_scale ? "absolute" : "up_to_scale";
    doc["block_matrix"] = rational_matrix(pm.block_transition_matrix());
    if (!o->word.empty()) {
      const auto w = parse_word(o->word);
      doc["state"] = o->state;
      doc["word"] = o->word;
      doc["value"] = to_string(pm.interval_measure(o->state, w));
      doc["normalized"] = to_string(pm.normalized_measure(o->state, w));
    }
    pr.json_doc(doc);
  });
}

void register_spectrum(CLI::App& app, Registry& reg) {
  auto* grp = app.add_subcommand("spectrum", "Level sets, densities and the base-2 three-digit counting function");
  grp->require_subcommand(1);

  struct Opts {
    std::string f = "stern", csv, mode = "binary_drive", n;
    std::uint64_t lo = 4096, hi = 8192, N = 1u << 16, H = 1u << 16;
    double alpha = 0.5, eps = 0.05;
    int K = 14, b = 2, d = 3;
    std::size_t s = 100000;
    std::optional<std::uint64_t> seed;
  };
  auto o = std::make_shared<Opts>();
  auto fn_opt = [o](CLI::App* cmd) {
    cmd->add_option("--f", o->f, "Function: stern, n, nsin")->capture_default_str();
  };

  auto* prof = grp->add_subcommand("profile", "CSV of (n, log f(n) / log n)");
  fn_opt(prof);
  prof->add_option("--lo", o->lo, "First n (>= 2)")->capture_default_str();
  prof->add_option("--hi", o->hi, "End of range (exclusive)")->capture_default_str();
  prof->add_option("--csv", o->csv, "Write the CSV to this file instead of stdout");
  reg.add(prof, [o](Printer& pr) {
    auto f = spectrum::growth_function(o->f, std::max<std::uint64_t>(o->hi, 2));
    std::ostringstream os;
    os << "n,ratio\n";
    for (const auto& pt : spectrum::profile(f, o->lo, o->hi)) os << pt.n << "," << fmt_double(pt.ratio, pr.cfg().precision) << "\n";
    if (o->csv.empty()) {
      pr.raw(os.str());
    } else {
      write_file(o->csv, os.str());
    }
  });

  auto* level = grp->add_subcommand("level", "Level set E(alpha, eps) below N with its densities");
  fn_opt(level);
  level->add_option("--alpha", o->alpha, "Target ratio")->capture_default_str();
  level->add_option("--eps", o->eps, "Half-width")->capture_default_str();
  level->add_option("--N", o->N, "Horizon")->capture_default_str();
  reg.add(level, [o](Printer& pr) {
    auto f = spectrum::growth_function(o->f, o->N);
    auto ls = spectrum::level_set(f, o->alpha, o->eps, o->N);
    if (pr.cfg().format == "csv") {
      pr.raw(density_csv(ls.profile, pr.cfg().precision));
    } else {
      json doc = density_json(ls.profile, pr.cfg().precision);
      doc["f"] = o->f;
      doc["alpha"] = o->alpha;
      doc["eps"] = o->eps;
      pr.json_doc(doc);
    }
  });

  auto* a0 = grp->add_subcommand("alpha0", "Estimate of alpha0 over [2^(K-1), 2^K)");
  a0->add_option("--K", o->K, "Exponent")->capture_default_str();
  reg.add(a0, [o](Printer& pr) {
    const double a = spectrum::alpha0_estimate(o->K);
    auto ends = spectrum::spectrum_endpoints(a);
    const int p = pr.cfg().precision;
    pr.json_doc({{"K", o->K},
                 {"alpha0", num(a, p)},
                 {"endpoints", {{"typical_local_dimension", num(ends.typical, p)}, {"minimal_local_dimension", num(ends.minimal, p)}}}});
  });

  auto* ly = grp->add_subcommand("lyapunov", "Growth rate of continued-fraction denominators");
  ly->add_option("--mode", o->mode, "binary_drive or levy")->capture_default_str();
  ly->add_option("--s", o->s, "Number of partial quotients")->capture_default_str();
  ly->add_option("--seed", o->seed, "Seed (overrides the global --seed)");
  reg.add(ly, [o](Printer& pr) {
    const auto mode = spectrum::parse_lyapunov_mode(o->mode);
    const std::uint64_t seed = o->seed.value_or(pr.cfg().seed);
    auto est = spectrum::lyapunov_estimate(mode, seed, o->s);
    const int p = pr.cfg().precision;
    pr.json_doc({{"mode", spectrum::lyapunov_mode_name(mode)},
                 {"seed", seed},
                 {"s", est.s},
                 {"log_q_over_s", num(est.per_quotient, p)},
                 {"log_q_over_s_log4", num(est.normalized, p)}});
  });

  auto* il = grp->add_subcommand("interleave", "Level set E(alpha) spliced from E(alpha, 1/k)");
  fn_opt(il);
  il->add_option("--alpha", o->alpha, "Target ratio")->capture_default_str();
  il->add_option("--H", o->H, "Horizon")->capture_default_str();
  reg.add(il, [o](Printer& pr) {
    auto f = spectrum::growth_function(o->f, o->H);
    std::vector<double> ratio(o->H, 0.0);
    for (std::uint64_t n = 2; n < o->H; ++n) ratio[n] = spectrum::growth_ratio(f, n);
    const double alpha = o->alpha;
    auto member = [&ratio, alpha](int k, std::uint64_t n) {
      if (n < 2 || n >= ratio.size()) return false;
      return std::abs(ratio[n] - alpha) <= 1.0 / k;
    };
    std::map<int, spectrum::DensityTargets> cache;
    auto targets = [&](int k) {
      auto it = cache.find(k);
      if (it != cache.end()) return it->second;
      std::vector<std::uint64_t> members;
      for (std::uint64_t n = 2; n < o->H; ++n)
        if (member(k, n)) members.push_back(n);
      auto t = spectrum::targets_from_profile(spectrum::density_profile(members, o->H));
      cache.emplace(k, t);
      return t;
    };
    auto res = spectrum::interleave(member, targets, o->H);
    auto prof = spectrum::density_profile(res.members, o->H);
    if (pr.cfg().format == "csv") {
      pr.raw(density_csv(prof, pr.cfg().precision));
      return;
    }
    json doc;
    doc["f"] = o->f;
    doc["alpha"] = alpha;
    doc["cuts"] = res.cuts;
    doc["direction"] = res.direction;
    doc["stop_reason"] = res.stop_reason;
    doc["members"] = res.members.size();
    doc["density"] = density_json(prof, pr.cfg().precision);
    pr.json_doc(doc);
  });

  auto* st = grp->add_subcommand("stern", "Representation count f(n) by the recursion");
  st->add_option("--n", o->n, "Nonnegative integer")->required();
  st->add_option("--b", o->b, "Base")->capture_default_str();
  st->add_option("--d", o->d, "Digit count")->capture_default_str();
  reg.add(st, [o](Printer& pr) { pr.raw(spectrum::stern(parse_integer(o->n), o->b, o->d).get_str() + "\n"); });

  auto* runs = grp->add_subcommand("runs", "Binary runs a0..as of n and the denominator q_s");
  runs->add_option("--n", o->n, "Positive integer")->required();
  reg.add(runs, [o](Printer& pr) {
    const Integer n = parse_integer(o->n);
    if (n < 1 || !n.fits_ulong_p()) throw Error(ErrorCode::InvalidArgument, "n must be a positive 64-bit integer");
    auto r = spectrum::binary_runs(n.get_ui());
    pr.json_doc({{"a", r.a}, {"s", r.s()}, {"q", spectrum::cf_denominator(r.quotients()).get_str()}});
  });
}

void register_automata(CLI::App& app, Registry& reg) {
  auto* grp = app.add_subcommand("automata", "Labelled graphs and factor languages");
  grp->require_subcommand(1);

  struct Opts {
    std::string graph = "even-gap", word, map, a, b;
    std::size_t L = 8;
  };
  auto o = std::make_shared<Opts>();
  const std::string graph_help = "Graph JSON (file or inline) or a fixture: even-gap, cover, three-letter";

  auto* acc = grp->add_subcommand("accepts", "Is the word a factor of the graph's language?");
  acc->add_option("--graph", o->graph, graph_help)->capture_default_str();
  acc->add_option("--word", o->word, "Word")->required();
  reg.add(acc, [o](Printer& pr) {
    pr.json_doc({{"word", o->word}, {"accepts", automata::accepts_factor(graph_of(o->graph), o->word)}});
  });

  auto* img = grp->add_subcommand("image", "Letter-to-letter image of the length-L path labels");
  img->add_option("--graph", o->graph, graph_help)->capture_default_str();
  img->add_option("--map", o->map, "Letter map such as a:0,b:0,c:1")->required();
  img->add_option("--L", o->L, "Length")->capture_default_str();
  reg.add(img, [o](Printer& pr) {
    auto words = automata::morphism_image_language(graph_of(o->graph), letter_map_of(o->map), o->L);
    pr.json_doc({{"L", o->L}, {"words", std::vector<std::string>(words.begin(), words.end())}});
  });

  auto* cmp = grp->add_subcommand("compare", "Compare two factor languages up to length L");
  const std::string src_help =
      "Source: graph or fixture (factor language), GRAPH::a:0,b:1 (image), three-letter (its image), full:01";
  cmp->add_option("--a", o->a, src_help)->required();
  cmp->add_option("--b", o->b, src_help)->required();
  cmp->add_option("--L", o->L, "Maximal length")->capture_default_str();
  reg.add(cmp, [o](Printer& pr) {
    auto r = automata::languages_equal_up_to(source_of(o->a), source_of(o->b), o->L);
    json doc{{"equal", r.equal}, {"L", o->L}};
    doc["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
    if (r.counterexample) doc["present_in"] = r.present_in;
    pr.json_doc(doc);
  });

  auto* dot = grp->add_subcommand("dot", "Graphviz rendering of a graph");
  dot->add_option("--graph", o->graph, graph_help)->capture_default_str();
  reg.add(dot, [o](Printer& pr) {
    auto g = graph_of(o->graph);
    if (pr.cfg().format == "json") {
      pr.raw(io::graph_to_json(g) + "\n");
    } else {
      pr.raw(automata::to_dot(g));
    }
  });
}

void report(std::ostream& err, const std::string& code, const std::string& message) {
  err << json{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Exact sofic measures, Bernoulli convolutions and Pisot numeration"};
  app.name("soficonv");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format: json, csv or dot")
      ->check(CLI::IsMember({"json", "csv", "dot"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomized estimates")->capture_default_str();
  app.add_option("--state-cap", cfg.state_cap, "Maximal number of carry states")->capture_default_str();
  app.add_option("--precision", cfg.precision, "Significant digits of floating output")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();

  Registry reg;
  register_sofic(app, reg);
  register_bernoulli(app, reg);
  register_pisot(app, reg);
  register_spectrum(app, reg);
  register_automata(app, reg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report(err, "USAGE", e.what());
    return kUsage;
  }

  Printer printer(out, cfg);
  try {
    for (auto& [cmd, action] : reg.actions) {
      if (cmd->parsed()) {
        action(printer);
        return kOk;
      }
    }
    report(err, "USAGE", "no subcommand selected");
    return kUsage;
  } catch (const Error& e) {
    report(err, std::string(error_code_name(e.code())), e.what());
    if (is_resource_error(e.code())) return kResource;
    if (e.code() == ErrorCode::ParseError) return kUsage;
    return kDomain;
  } catch (const std::exception& e) {
    report(err, "INTERNAL", e.what());
    return kDomain;
  }
}

}  // namespace soficonv::cli
