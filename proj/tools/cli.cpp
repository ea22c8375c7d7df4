#include "cli.hpp"

#include "verify_suite.hpp"

#include <sblf/case_tables.hpp>
#include <sblf/chart.hpp>
#include <sblf/classify.hpp>
#include <sblf/errors.hpp>
#include <sblf/hurwitz.hpp>
#include <sblf/pslword.hpp>
#include <sblf/search.hpp>
#include <sblf/sl2z.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <type_traits>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

namespace sblf::cli {
namespace {

using sblf::to_string;

using Json = nlohmann::ordered_json;

enum class Format { Text, Machine };

struct Globals {
  Format format = Format::Text;
  std::string out_path;
  std::int64_t bound = 25;
  std::size_t budget = SearchBudget::kDefaultMaxStates;
  std::int64_t max_entry = SearchBudget::kDefaultMaxEntry;
  ConjugationScope scope = ConjugationScope::X1Powers;

  SearchBudget search_budget() const {
    SearchBudget b;
    b.max_states = budget;
    b.max_entry = max_entry;
    b.scope = scope;
    return b;
  }
};

/// What a command produced: a text rendering, machine records and an exit code.
struct Outcome {
  int code = 0;
  std::string text;
  std::vector<Json> records;

  void line(const std::string& s, Json record) {
    text += s + '\n';
    records.push_back(std::move(record));
  }
};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json matrix_json(const Sl2Matrix& m) {
  return Json::array({Json::array({to_string(m.a()), to_string(m.b())}),
                      Json::array({to_string(m.c()), to_string(m.d())})});
}

std::vector<std::string> move_strings(const std::vector<Move>& moves) {
  std::vector<std::string> out;
  for (const Move& m : moves) out.push_back(to_string(m));
  return out;
}

DifferenceTuple parse_tuple(const std::string& text) {
  std::string cleaned;
  for (char ch : text) cleaned += (ch == '(' || ch == ')' || ch == ',') ? ' ' : ch;
  std::istringstream in(cleaned);
  DifferenceTuple d;
  std::string token;
  while (in >> token) {
    std::int64_t v = 0;
    if (!fits_int64(parse_integer(token), v)) throw InputError("tuple entry out of range: " + token);
    d.push_back(v);
  }
  if (d.empty()) throw InputError("empty tuple");
  return d;
}

std::string parabolic_text(const SignedParabolic& sp) {
  return std::string(1, sign_char(sp.sign)) + " T" + to_string(sp.power.curve) + "^" + to_string(sp.power.exponent);
}

struct SystemInput {
  std::string normal;
  std::string file;

  HurwitzSystem load() const {
    if (!normal.empty() && !file.empty()) throw InputError("give either --normal or --file, not both");
    if (!normal.empty()) return parse_normal_form(normal).expand();
    if (!file.empty()) return parse_system(read_file(file));
    throw InputError("a system is required: --normal or --file");
  }
};

class Cli {
 public:
  Cli() : app_("Monodromy algebra of genus-1 simplified broken Lefschetz fibrations", "sblf") {
    app_.require_subcommand(1);
    app_.add_option("--format", format_name_, "Output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
    app_.add_option("--out", g_.out_path, "Write output to a file instead of stdout");
    app_.add_option("--bound", g_.bound, "Search bound for difference tuples")
        ->check(CLI::Range(1, 1000))
        ->capture_default_str();
    app_.add_option("--budget", g_.budget, "Maximum number of states per search")
        ->check(CLI::Range(1, 100000000))
        ->capture_default_str();
    app_.add_option("--max-entry", g_.max_entry, "Largest matrix entry explored by searches")
        ->check(CLI::Range(static_cast<std::int64_t>(1), static_cast<std::int64_t>(1) << 62))
        ->capture_default_str();
    app_.add_option("--scope", scope_name_, "Conjugations identified during searches")
        ->check(CLI::IsMember({"none", "x1", "full"}))
        ->capture_default_str();
    add_word();
    add_matrix();
    add_system();
    add_classify();
    add_chart();
    auto* verify = app_.add_subcommand("verify-paper", "Replay every identity and probe");
    verify->add_option("--seed", config_.seed, "Random seed")->capture_default_str();
    verify->callback([this] { action_ = [this] { return verify_paper(); }; });
  }

  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    std::reverse(args.begin(), args.end());
    try {
      apply_environment();
      app_.parse(args);
    } catch (const CLI::CallForHelp& e) {
      return app_.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
      return app_.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
      return app_.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
      app_.exit(e, out, err);
      return 2;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
    g_.format = format_name_ == "machine" ? Format::Machine : Format::Text;
    g_.scope = scope_name_ == "none"   ? ConjugationScope::None
               : scope_name_ == "full" ? ConjugationScope::Full
                                       : ConjugationScope::X1Powers;
    Outcome outcome;
    try {
      outcome = action_();
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return 2;
    }
    std::string rendered;
    if (g_.format == Format::Machine) {
      for (const Json& r : outcome.records) rendered += r.dump() + '\n';
    } else {
      rendered = outcome.text;
    }
    if (g_.out_path.empty()) {
      out << rendered;
    } else {
      std::ofstream file(g_.out_path, std::ios::binary);
      if (!file) {
        err << "error: cannot write '" << g_.out_path << "'\n";
        return 2;
      }
      file << rendered;
    }
    return outcome.code;
  }

 private:
  /// SBLF_BOUND, SBLF_BUDGET and SBLF_MAX_ENTRY replace the built-in defaults.
  void apply_environment() {
    auto read = [](const char* name, std::int64_t lo, std::int64_t hi, auto& target) {
      const char* value = std::getenv(name);
      if (value == nullptr || *value == '\0') return;
      std::int64_t v = 0;
      if (!fits_int64(parse_integer(value), v) || v < lo || v > hi) {
        throw InputError(std::string(name) + "=" + value + " is outside [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
      }
      target = static_cast<std::remove_reference_t<decltype(target)>>(v);
    };
    read("SBLF_BOUND", 1, 1000, g_.bound);
    read("SBLF_BUDGET", 1, 100000000, g_.budget);
    read("SBLF_MAX_ENTRY", 1, static_cast<std::int64_t>(1) << 62, g_.max_entry);
  }

  void set(std::function<Outcome()> action) { action_ = std::move(action); }

  CLI::App* sub(CLI::App* parent, const std::string& name, const std::string& description) {
    return parent->add_subcommand(name, description);
  }

  // word ------------------------------------------------------------------

  void add_word() {
    auto* word = app_.add_subcommand("word", "Reduced words in PSL(2,Z) = <a,b | a^3, b^2>");
    word->require_subcommand(1);

    auto* reduce = sub(word, "reduce", "Reduce a word in a, a2, b, a^k, b^k");
    reduce->add_option("word", tokens_, "Letters")->required();
    reduce->callback([this] {
      set([this] {
        Outcome o;
        const PslWord w = parse_word(join(tokens_));
        o.line(to_string(w), {{"word", to_string(w)}, {"length", w.size()}});
        return o;
      });
    });

    auto* multiply = sub(word, "multiply", "Product of two words");
    multiply->add_option("u", text_a_)->required();
    multiply->add_option("v", text_b_)->required();
    multiply->callback([this] {
      set([this] {
        Outcome o;
        const PslWord w = word_multiply(parse_word(text_a_), parse_word(text_b_));
        o.line(to_string(w), {{"word", to_string(w)}});
        return o;
      });
    });

    auto* inverse = sub(word, "inverse", "Inverse of a word");
    inverse->add_option("word", tokens_)->required();
    inverse->callback([this] {
      set([this] {
        Outcome o;
        const PslWord w = word_inverse(parse_word(join(tokens_)));
        o.line(to_string(w), {{"word", to_string(w)}});
        return o;
      });
    });

    auto* t = sub(word, "t", "Reversal anti-automorphism");
    t->add_option("word", tokens_)->required();
    t->callback([this] {
      set([this] {
        Outcome o;
        const PslWord w = t_map(parse_word(join(tokens_)));
        o.line(to_string(w), {{"word", to_string(w)}});
        return o;
      });
    });

    auto* eval = sub(word, "eval", "Matrix of a signed word such as `- a b a`");
    eval->add_option("word", tokens_)->required();
    eval->callback([this] {
      set([this] {
        Outcome o;
        const Sl2Matrix m = evaluate(parse_signed_word(join(tokens_)));
        o.line(to_string(m), {{"matrix", matrix_json(m)}});
        return o;
      });
    });

    auto* power = sub(word, "power", "Word of X1^n or X2^n");
    power->add_option("generator", name_)->required()->check(CLI::IsMember({"X1", "X2"}));
    power->add_option("n", int_a_)->required();
    power->callback([this] {
      set([this] {
        Outcome o;
        const PslWord w = name_ == "X1" ? x1_power_word(int_a_) : x2_power_word(int_a_);
        o.line(to_string(w), {{"word", to_string(w)}});
        return o;
      });
    });
  }

  // matrix ----------------------------------------------------------------

  void add_matrix() {
    auto* matrix = app_.add_subcommand("matrix", "SL(2,Z) arithmetic, twists and parabolics");
    matrix->require_subcommand(1);

    auto* word = sub(matrix, "word", "Signed reduced word of a matrix");
    word->add_option("matrix", text_a_, "[[a,b],[c,d]]")->required();
    word->callback([this] {
      set([this] {
        Outcome o;
        const SignedElement e = matrix_to_signed_word(parse_matrix(text_a_));
        o.line(to_string(e), {{"sign", std::string(1, sign_char(e.sign))}, {"word", to_string(e.word)}});
        return o;
      });
    });

    auto* gen = sub(matrix, "generator", "X1, X2, A, B or E");
    gen->add_option("name", name_)->required();
    gen->callback([this] {
      set([this] {
        Outcome o;
        const Sl2Matrix m = generator(name_);
        o.line(to_string(m), {{"matrix", matrix_json(m)}});
        return o;
      });
    });

    auto* multiply = sub(matrix, "multiply", "Product of matrices left to right");
    // CLI11 reads a bracketed vector value as a list, so matrices after the first are
    // collected as extras.
    multiply->add_option("matrix", text_a_, "[[a,b],[c,d]]")->required();
    multiply->allow_extras();
    multiply->callback([this, multiply] {
      tokens_ = multiply->remaining();
      set([this] {
        Outcome o;
        Sl2Matrix m = parse_matrix(text_a_);
        for (const std::string& t : tokens_) m *= parse_matrix(t);
        o.line(to_string(m), {{"matrix", matrix_json(m)}});
        return o;
      });
    });

    auto* inverse = sub(matrix, "inverse", "Inverse matrix");
    inverse->add_option("matrix", text_a_)->required();
    inverse->callback([this] {
      set([this] {
        Outcome o;
        const Sl2Matrix m = parse_matrix(text_a_).inverse();
        o.line(to_string(m), {{"matrix", matrix_json(m)}});
        return o;
      });
    });

    auto* parabolic = sub(matrix, "parabolic", "Write a trace +-2 matrix as +-T_(p,q)^k");
    parabolic->add_option("matrix", text_a_)->required();
    parabolic->callback([this] {
      set([this] {
        Outcome o;
        const auto sp = signed_parabolic(parse_matrix(text_a_));
        if (!sp) {
          o.code = 1;
          o.line("not parabolic", {{"parabolic", nullptr}});
        } else {
          o.line(parabolic_text(*sp), {{"sign", std::string(1, sign_char(sp->sign))},
                                       {"p", to_string(sp->power.curve.p())},
                                       {"q", to_string(sp->power.curve.q())},
                                       {"exponent", to_string(sp->power.exponent)}});
        }
        return o;
      });
    });

    auto* twist = sub(matrix, "twist", "Matrix of the twist along (p,q)");
    twist->add_option("p", int_a_)->required();
    twist->add_option("q", int_b_)->required();
    twist->add_option("--power", int_c_, "Exponent")->capture_default_str();
    twist->callback([this] {
      set([this] {
        Outcome o;
        const Sl2Matrix m = twist_power(Curve(int_a_, int_b_), int_c_);
        o.line(to_string(m), {{"matrix", matrix_json(m)}});
        return o;
      });
    });

    auto* apply = sub(matrix, "apply-twist", "Image of the curve (gp,gq) under the twist along (p,q)");
    apply->add_option("p", int_a_)->required();
    apply->add_option("q", int_b_)->required();
    apply->add_option("gp", int_c_)->required();
    apply->add_option("gq", int_d_)->required();
    apply->callback([this] {
      set([this] {
        Outcome o;
        const Curve c = apply_twist(Curve(int_a_, int_b_), Curve(int_c_, int_d_));
        o.line(to_string(c), {{"p", to_string(c.p())}, {"q", to_string(c.q())}});
        return o;
      });
    });

    auto* boundary = sub(matrix, "boundary", "Write a matrix as +-X1^m");
    boundary->add_option("matrix", text_a_)->required();
    boundary->callback([this] {
      set([this] {
        Outcome o;
        const auto bc = as_plus_minus_x1_power(parse_matrix(text_a_));
        if (!bc) {
          o.code = 1;
          o.line("not a power of X1 up to sign", {{"boundary", nullptr}});
        } else {
          o.line(to_string(*bc), {{"sign", std::string(1, sign_char(bc->sign))}, {"m", to_string(bc->m)}});
        }
        return o;
      });
    });
  }

  // system ----------------------------------------------------------------

  void system_input(CLI::App* app) {
    app->add_option("--normal", input_.normal, "Normal form such as `S2 T(3,0)`");
    app->add_option("--file", input_.file, "System file, one element per line");
  }

  void add_system() {
    auto* system = app_.add_subcommand("system", "Hurwitz systems of conjugates of X1");
    system->require_subcommand(1);

    auto* product = sub(system, "product", "Total monodromy");
    system_input(product);
    product->callback([this] {
      set([this] {
        Outcome o;
        const Sl2Matrix m = total_monodromy(input_.load());
        if (const auto bc = as_plus_minus_x1_power(m)) {
          o.line(to_string(*bc), {{"matrix", matrix_json(m)},
                                  {"sign", std::string(1, sign_char(bc->sign))},
                                  {"m", to_string(bc->m)}});
        } else {
          o.line(to_string(m), {{"matrix", matrix_json(m)}});
        }
        return o;
      });
    });

    auto* compatible = sub(system, "compatible", "Check the product is +-X1^m");
    system_input(compatible);
    compatible->callback([this] {
      set([this] {
        Outcome o;
        if (const auto bc = is_sblf_compatible(input_.load())) {
          o.line(to_string(*bc), {{"compatible", true}, {"sign", std::string(1, sign_char(bc->sign))},
                                  {"m", to_string(bc->m)}});
        } else {
          o.code = 1;
          o.line("incompatible", {{"compatible", false}});
        }
        return o;
      });
    });

    auto* move = sub(system, "move", "Apply elementary transformations, e.g. `forward 1 backward 2`");
    system_input(move);
    move->add_option("moves", tokens_)->required();
    move->callback([this] {
      set([this] {
        HurwitzSystem w = input_.load();
        if (tokens_.size() % 2) throw InputError("moves come in pairs: forward|backward <position>");
        for (std::size_t i = 0; i < tokens_.size(); i += 2) {
          Direction d;
          if (tokens_[i] == "forward") {
            d = Direction::Forward;
          } else if (tokens_[i] == "backward") {
            d = Direction::Backward;
          } else {
            throw InputError("unknown move direction '" + tokens_[i] + "'");
          }
          std::int64_t pos = 0;
          if (!fits_int64(parse_integer(tokens_[i + 1]), pos) || pos < 1) {
            throw InputError("bad position '" + tokens_[i + 1] + "'");
          }
          w = elementary_transformation(w, static_cast<std::size_t>(pos), d);
        }
        return system_outcome(w);
      });
    });

    auto* conj = sub(system, "conjugate", "Replace every element h by g^-1 h g");
    system_input(conj);
    conj->add_option("g", text_a_, "[[a,b],[c,d]]")->required();
    conj->callback([this] {
      set([this] { return system_outcome(simultaneous_conjugation(input_.load(), parse_matrix(text_a_))); });
    });

    auto* expand = sub(system, "expand", "List the elements");
    system_input(expand);
    expand->callback([this] { set([this] { return system_outcome(input_.load()); }); });

    auto* search = sub(system, "search", "Bounded search for an equivalence");
    system_input(search);
    search->add_option("--to", target_.normal, "Target normal form");
    search->add_option("--to-file", target_.file, "Target system file");
    search->callback([this] {
      set([this] { return search_outcome(bounded_equivalence_search(input_.load(), target_.load(),
                                                                    g_.search_budget())); });
    });

    auto* matsumoto = sub(system, "matsumoto", "Search for moves to (X1, X2, ..., X1, X2)");
    system_input(matsumoto);
    matsumoto->callback([this] {
      set([this] { return search_outcome(matsumoto_normalize(input_.load(), g_.search_budget())); });
    });
  }

  Outcome system_outcome(const HurwitzSystem& w) {
    Outcome o;
    for (const Sl2Matrix& m : w.elements()) o.line(to_string(m), {{"matrix", matrix_json(m)}});
    return o;
  }

  Outcome search_outcome(const SearchResult& r) {
    Outcome o;
    if (r.moves) {
      const std::vector<std::string> moves = move_strings(*r.moves);
      o.text = "found " + std::to_string(moves.size()) + " moves after " + std::to_string(r.states_explored) +
               " states\n";
      for (const std::string& m : moves) o.text += m + '\n';
      o.records.push_back({{"status", "found"}, {"states", r.states_explored}, {"moves", moves}});
    } else {
      o.line("inconclusive after " + std::to_string(r.states_explored) + " states",
             {{"status", "inconclusive"}, {"states", r.states_explored}, {"exhausted", r.exhausted}});
    }
    return o;
  }

  // classify --------------------------------------------------------------

  void add_classify() {
    auto* classify = app_.add_subcommand("classify", "Twist equations and manifold names");
    classify->require_subcommand(1);

    auto* solve = sub(classify, "solve", "Difference tuples whose word is a power of x1");
    solve->add_option("--s", int_a_, "Number of twists")->required()->check(CLI::Range(2, 12));
    solve->add_option("--bound", local_bound_, "Entry bound (defaults to the global bound)")
        ->check(CLI::Range(1, 1000));
    solve->add_flag("--filtered", flag_, "Apply the exclusion rules");
    solve->callback([this] {
      set([this] {
        Outcome o;
        const auto solutions = t_part_equation_solutions(static_cast<int>(int_a_), bound());
        if (flag_) {
          for (const DifferenceTuple& d : filter_irreducible(solutions)) {
            o.line(to_string(d), {{"tuple", d}});
          }
        } else {
          for (const EquationSolution& sol : solutions) {
            const std::string power = to_string(sol.power);
            o.line(to_string(sol.differences) + " x1^" + power, {{"tuple", sol.differences}, {"power", power}});
          }
        }
        return o;
      });
    });

    auto* table = sub(classify, "table", "Classification for r twists");
    table->add_option("--r", int_a_, "Number of Lefschetz singularities")->required();
    table->callback([this] {
      set([this] {
        Outcome o;
        for (const ClassificationEntry& e : classify_sblf(static_cast<int>(int_a_), bound())) {
          std::vector<std::string> names;
          for (const ManifoldName& n : e.candidates) names.push_back(to_string(n));
          std::vector<std::string> blocks;
          for (const DifferenceTuple& d : e.blocks) blocks.push_back(to_string(d));
          std::string line = to_string(e.representative()) + "  ";
          for (std::size_t i = 0; i < names.size(); ++i) line += (i ? " | " : "") + names[i];
          if (!e.identified) line += "  (unidentified)";
          if (e.gluing_undetermined) line += "  (gluing undetermined)";
          o.line(line, {{"r", e.r},
                        {"k", e.k},
                        {"normal_form", to_string(e.representative())},
                        {"blocks", blocks},
                        {"candidates", names},
                        {"identified", e.identified},
                        {"gluing_undetermined", e.gluing_undetermined}});
        }
        return o;
      });
    });

    auto* identify = sub(classify, "identify", "Manifold names for a normal form");
    identify->add_option("--normal", input_.normal)->required();
    identify->callback([this] {
      set([this] {
        Outcome o;
        const auto names = identify_manifold(parse_normal_form(input_.normal));
        if (!names) {
          o.line("unidentified", {{"identified", false}});
          return o;
        }
        std::vector<std::string> list;
        for (const ManifoldName& n : *names) list.push_back(to_string(n));
        std::string line;
        for (std::size_t i = 0; i < list.size(); ++i) line += (i ? " | " : "") + list[i];
        o.line(line, {{"identified", true}, {"candidates", list}});
        return o;
      });
    });

    auto* chi = sub(classify, "chi", "Euler characteristic of a connected sum");
    chi->add_option("name", tokens_, "e.g. `2CP2bar # S2xS2`")->required();
    chi->callback([this] {
      set([this] {
        Outcome o;
        const ManifoldName n = parse_manifold_name(join(tokens_));
        const int c = chi_of_name(n);
        o.line(std::to_string(c), {{"name", to_string(n)}, {"chi", c}});
        return o;
      });
    });

    auto* witness = sub(classify, "witness", "Exclusion witness for a difference tuple");
    witness->add_option("--tuple", text_a_, "e.g. (1,1)")->required();
    witness->callback([this] {
      set([this] {
        Outcome o;
        const DifferenceTuple d = parse_tuple(text_a_);
        const auto w = find_exclusion(d);
        if (!w) {
          o.line("irreducible", {{"tuple", d}, {"excluded", false}});
          return o;
        }
        Json rec = {{"tuple", d},
                    {"excluded", true},
                    {"rule", to_string(w->rule)},
                    {"window_start", w->window_start},
                    {"window_length", w->window_length},
                    {"realization", to_string(realize(d))}};
        std::string text = to_string(w->rule) + " at " + std::to_string(w->window_start) + " length " +
                           std::to_string(w->window_length) + " in " + to_string(realize(d)) + '\n';
        if (w->window_product) {
          rec["window_product"] = to_string(*w->window_product);
          text += "window product " + to_string(*w->window_product) + '\n';
        }
        if (!w->moves.empty()) {
          rec["moves"] = move_strings(w->moves);
          for (const std::string& m : move_strings(w->moves)) text += m + '\n';
        }
        o.text = text;
        o.records.push_back(rec);
        return o;
      });
    });
  }

  std::int64_t bound() const { return local_bound_ > 0 ? local_bound_ : g_.bound; }

  // chart -----------------------------------------------------------------

  void add_chart() {
    auto* chart = app_.add_subcommand("chart", "Chart files");
    chart->require_subcommand(1);

    auto* validate_cmd = sub(chart, "validate", "Check the chart conditions");
    validate_cmd->add_option("file", text_a_)->required();
    validate_cmd->callback([this] {
      set([this] {
        Outcome o;
        const auto violations = validate(parse_chart(read_file(text_a_)));
        for (const Violation& v : violations) {
          o.line(v.code() + " " + v.element + ": " + v.message,
                 {{"code", v.code()}, {"element", v.element}, {"message", v.message}});
        }
        if (violations.empty()) {
          o.line("valid", {{"valid", true}});
        } else {
          o.code = 1;
        }
        return o;
      });
    });

    auto* boundary = sub(chart, "boundary", "Boundary sequence of a chart");
    boundary->add_option("file", text_a_)->required();
    boundary->callback([this] {
      set([this] {
        Outcome o;
        const std::string seq = to_string(boundary_sequence(parse_chart(read_file(text_a_))));
        o.line(seq, {{"sequence", seq}});
        return o;
      });
    });

    auto* decompose = sub(chart, "decompose", "Split a boundary sequence into units and combs");
    decompose->add_option("file", text_a_, "Chart file");
    decompose->add_option("--sequence", text_b_, "Sequence such as ((1,-1),(2,+1))");
    decompose->callback([this] {
      set([this] {
        if (text_a_.empty() == text_b_.empty()) throw InputError("give either a chart file or --sequence");
        const BoundarySeq seq = text_b_.empty() ? boundary_sequence(parse_chart(read_file(text_a_)))
                                                : parse_boundary_sequence(text_b_);
        Outcome o;
        const auto d = decompose_boundary(seq);
        if (!d) {
          o.code = 1;
          o.line("no decomposition", {{"decomposable", false}});
          return o;
        }
        std::string blocks;
        Json list = Json::array();
        for (const BoundaryBlock& b : d->blocks) {
          blocks += (blocks.empty() ? "" : " ") + std::string(b.length == 1 ? "unit@" : "comb@") +
                    std::to_string(b.start + 1);
          list.push_back({{"start", b.start + 1}, {"length", b.length}});
        }
        o.line(std::to_string(d->singletons()) + " units, " + std::to_string(d->combs()) + " combs: " + blocks,
               {{"decomposable", true}, {"singletons", d->singletons()}, {"combs", d->combs()}, {"blocks", list}});
        return o;
      });
    });

    auto* word = sub(chart, "word", "Intersection word of a path");
    word->add_option("file", text_a_)->required();
    word->add_option("--path", text_b_, "Crossings such as `3+ 5-`")->required();
    word->callback([this] {
      set([this] {
        Outcome o;
        const Chart c = parse_chart(read_file(text_a_));
        const SignedElement e = intersection_word(c, parse_path(text_b_));
        o.line(to_string(e), {{"sign", std::string(1, sign_char(e.sign))},
                              {"word", to_string(e.word)},
                              {"matrix", matrix_json(evaluate(e))}});
        return o;
      });
    });

    auto* format = sub(chart, "format", "Rewrite a chart file in id order");
    format->add_option("file", text_a_)->required();
    format->callback([this] {
      set([this] {
        Outcome o;
        const std::string text = serialize(parse_chart(read_file(text_a_)));
        o.text = text;
        o.records.push_back({{"chart", text}});
        return o;
      });
    });

    auto* tables = sub(chart, "tables", "Check the case-table identities");
    tables->add_option("--n-min", n_min_)->capture_default_str();
    tables->add_option("--n-max", n_max_)->capture_default_str();
    tables->callback([this] {
      set([this] {
        Outcome o;
        const CaseTableReport r = verify_case_tables(n_min_, n_max_);
        for (const CaseMismatch& m : r.mismatches) {
          o.line("mismatch table " + std::to_string(m.table) + " case " + std::to_string(m.case_number) +
                     " n=" + std::to_string(m.n) + ": expected " + m.expected + ", got " + m.actual,
                 {{"table", m.table}, {"case", m.case_number}, {"n", m.n}, {"expected", m.expected},
                  {"actual", m.actual}});
        }
        o.line(std::to_string(r.identities_checked) + " identities over " + std::to_string(r.cases_covered) +
                   " cases, " + std::to_string(r.mismatches.size()) + " mismatches",
               {{"identities", r.identities_checked}, {"cases", r.cases_covered},
                {"mismatches", r.mismatches.size()}});
        if (!r.ok()) o.code = 1;
        return o;
      });
    });
  }

  // verify-paper ----------------------------------------------------------

  Outcome verify_paper() {
    config_.bound = g_.bound;
    config_.budget = g_.search_budget();
    const Report report = verify_paper_suite(config_);
    Outcome o;
    o.text = report.render_text();
    for (const ReportRow& r : report.rows) {
      o.records.push_back(
          {{"id", r.id}, {"anchor", r.anchor}, {"status", to_string(r.status)}, {"detail", r.detail}});
    }
    o.code = report.any_fail() ? 1 : 0;
    return o;
  }

  CLI::App app_;
  Globals g_;
  std::string format_name_ = "text";
  std::string scope_name_ = "x1";
  SuiteConfig config_;
  std::function<Outcome()> action_;

  std::vector<std::string> tokens_;
  std::string text_a_;
  std::string text_b_;
  std::string name_;
  std::int64_t int_a_ = 0;
  std::int64_t int_b_ = 0;
  std::int64_t int_c_ = 1;
  std::int64_t int_d_ = 0;
  std::int64_t local_bound_ = 0;
  std::int64_t n_min_ = -10;
  std::int64_t n_max_ = 10;
  bool flag_ = false;
  SystemInput input_;
  SystemInput target_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto cli = std::make_unique<Cli>();
  return cli->run(args, out, err);
}

}  // namespace sblf::cli
