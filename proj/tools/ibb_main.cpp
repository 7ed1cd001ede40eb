#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ibb/abelian.hpp"
#include "ibb/counting.hpp"
#include "ibb/enumeration.hpp"
#include "ibb/errors.hpp"
#include "ibb/eval.hpp"
#include "ibb/partial_perm.hpp"
#include "ibb/relations.hpp"
#include "ibb/render.hpp"
#include "ibb/word.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitInternal = 4;

// Evaluation and composition read left to right: in `compose A B` the word
// A acts first.

ibb::Word parse_word_arg(const std::string& text, int rank) {
  return ibb::parse_word(text, rank);
}

int run_eval(int n, const std::string& word_text, bool json) {
  auto image = ibb::eval_word(parse_word_arg(word_text, n), ibb::EvalContext{n, true});
  if (json) {
    std::cout << ibb::to_json(image).dump() << '\n';
  } else {
    std::cout << ibb::to_text(image) << '\n';
  }
  return kExitOk;
}

int run_compose(int n, const std::string& lhs, const std::string& rhs, bool json) {
  ibb::EvalContext ctx{n, true};
  auto image = ibb::compose(ibb::eval_word(parse_word_arg(lhs, n), ctx),
                            ibb::eval_word(parse_word_arg(rhs, n), ctx));
  if (json) {
    std::cout << ibb::to_json(image).dump() << '\n';
  } else {
    std::cout << ibb::to_text(image) << '\n';
  }
  return kExitOk;
}

int run_verify(const std::string& id_name, int n, bool json) {
  ibb::PresentationId id = ibb::presentation_from_string(id_name);
  ibb::VerificationReport report = ibb::verify_presentation(id, n);
  if (json) {
    std::cout << report.to_json().dump() << '\n';
  } else {
    std::cout << ibb::to_string(id) << " n=" << n << ": " << report.pairs.size()
              << " pairs, ";
    if (report.all_equal) {
      std::cout << "all equal\n";
    } else {
      size_t failed = 0;
      for (const auto& p : report.pairs) failed += !p.equal;
      std::cout << failed << " FAILED\n";
      for (const auto& p : report.pairs) {
        if (p.equal) continue;
        std::cout << "  " << ibb::to_string(p.lhs) << " != " << ibb::to_string(p.rhs)
                  << ": " << ibb::to_text(p.image_lhs) << " vs "
                  << ibb::to_text(p.image_rhs) << '\n';
      }
    }
  }
  return report.all_equal ? kExitOk : kExitVerifyFailed;
}

int run_count(int n, bool unsigned_flag, bool json) {
  const bool with_signs = !unsigned_flag;
  ibb::BigInt formula = ibb::cardinality_formula(n, with_signs);
  std::optional<std::uint64_t> enumerated;
  if (n <= ibb::enumeration_cap(with_signs)) {
    ibb::ElementStream stream(n, with_signs);
    std::uint64_t count = 0;
    while (stream.next()) ++count;
    enumerated = count;
  }
  if (json) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["signed"] = with_signs;
    j["formula"] = formula.str();
    if (enumerated) {
      j["enumerated"] = *enumerated;
    } else {
      j["enumerated"] = nullptr;
    }
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "formula " << formula.str();
    if (enumerated) std::cout << ", enumerated " << *enumerated;
    std::cout << '\n';
  }
  return kExitOk;
}

int run_enumerate(int n, bool unsigned_flag, bool json) {
  ibb::ElementStream stream(n, !unsigned_flag);
  while (auto e = stream.next()) {
    if (json) {
      std::cout << ibb::to_json(*e).dump() << '\n';
    } else {
      std::cout << ibb::to_text(*e) << '\n';
    }
  }
  return kExitOk;
}

int run_normal_form(int n, const std::string& element_text, bool json) {
  ibb::SignedPartialPerm a = ibb::parse_element(element_text);
  if (a.rank() != n)
    throw ibb::ParseError("element has rank " + std::to_string(a.rank()) +
                          " but --n is " + std::to_string(n));
  ibb::Word word = ibb::surjectivity_word(a);
  if (json) {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["element"] = ibb::to_json(a);
    j["word"] = ibb::to_string(word);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << ibb::to_string(word) << '\n';
  }
  return kExitOk;
}

int run_abelianize(const std::string& word_text, std::optional<int> n, bool mod2,
                   bool json) {
  ibb::Word w = parse_word_arg(word_text, n.value_or(ibb::kMaxRank));
  ibb::AbelianImage image = ibb::abelianize(w);
  std::string text = mod2 ? ibb::to_string(ibb::to_mod2(image)) : ibb::to_string(image);
  if (json) {
    nlohmann::ordered_json j;
    j["word"] = ibb::to_string(w);
    j["mod2"] = mod2;
    j["value"] = text;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << text << '\n';
  }
  return kExitOk;
}

int run_render(int n, const std::string& word_text, const std::string& format,
               bool json) {
  auto image = ibb::eval_word(parse_word_arg(word_text, n), ibb::EvalContext{n, true});
  if (json) {
    std::cout << ibb::to_json(image).dump() << '\n';
    return kExitOk;
  }
  if (format == "text") {
    std::cout << ibb::render_text(image);
  } else if (format == "dot") {
    std::cout << ibb::render_dot(image);
  } else {
    throw ibb::ParseError("unknown render format '" + format + "'");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Signed partial permutation monoid I(B_n), braid-monoid words and "
      "presentations.\n"
      "Words and compositions read left to right: the first factor acts "
      "first.\n"
      "Word grammar: tokens separated by spaces or '*': s<i>, S<i> "
      "(sigma_i, its inverse),\n"
      "t, T (tau, its inverse), e (= e1), e<i>; '1' is the empty word.\n"
      "Element literals look like [1->+2, 2->-1, 3->.].\n"
      "Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 enumeration "
      "cap exceeded."};
  app.require_subcommand(1);

  int n = 0;
  std::string word_text;
  std::string word_text_rhs;
  std::string element_text;
  std::string presentation;
  std::string format = "text";
  bool json = false;
  bool unsigned_flag = false;
  bool mod2 = false;
  std::optional<int> opt_n;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a word in I(B_n)");
  eval_cmd->add_option("--n", n, "ambient rank")->required();
  eval_cmd->add_option("word", word_text, "word to evaluate");
  eval_cmd->add_flag("--json", json, "JSON output");

  auto* compose_cmd = app.add_subcommand("compose", "Evaluate two words and compose the images");
  compose_cmd->add_option("--n", n, "ambient rank")->required();
  compose_cmd->add_option("first", word_text, "word applied first")->required();
  compose_cmd->add_option("second", word_text_rhs, "word applied second")->required();
  compose_cmd->add_flag("--json", json, "JSON output");

  auto* verify_cmd = app.add_subcommand("verify", "Check every relation of a presentation");
  verify_cmd->add_option("--presentation", presentation, "presentation id")->required();
  verify_cmd->add_option("--n", n, "ambient rank")->required();
  verify_cmd->add_flag("--json", json, "JSON report");

  auto* count_cmd = app.add_subcommand("count", "Cardinality by formula and by enumeration");
  count_cmd->add_option("--n", n, "ambient rank")->required();
  count_cmd->add_flag("--unsigned", unsigned_flag, "count I_n instead of I(B_n)");
  count_cmd->add_flag("--json", json, "JSON output");

  auto* enum_cmd = app.add_subcommand("enumerate", "Stream all elements, one per line");
  enum_cmd->add_option("--n", n, "ambient rank")->required();
  enum_cmd->add_flag("--unsigned", unsigned_flag, "enumerate I_n instead of I(B_n)");
  enum_cmd->add_flag("--json", json, "JSON lines");

  auto* nf_cmd = app.add_subcommand("normal-form",
                                    "Word (eps letters then a Weyl lift) for an element");
  nf_cmd->add_option("--n", n, "ambient rank")->required();
  nf_cmd->add_option("element", element_text, "element literal")->required();
  nf_cmd->add_flag("--json", json, "JSON output");

  auto* ab_cmd = app.add_subcommand("abelianize", "Image of a word in the abelianization");
  ab_cmd->add_option("word", word_text, "word")->required();
  ab_cmd->add_option("--n", opt_n, "ambient rank used to validate letters");
  ab_cmd->add_flag("--mod2", mod2, "reduce degrees mod 2");
  ab_cmd->add_flag("--json", json, "JSON output");

  auto* render_cmd = app.add_subcommand("render", "Strand diagram of a word's image");
  render_cmd->add_option("--n", n, "ambient rank")->required();
  render_cmd->add_option("word", word_text, "word to evaluate");
  render_cmd->add_option("--format", format, "text or dot")
      ->check(CLI::IsMember({"text", "dot"}));
  render_cmd->add_flag("--json", json, "JSON output (the image element)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (app.got_subcommand(eval_cmd)) return run_eval(n, word_text, json);
    if (app.got_subcommand(compose_cmd)) return run_compose(n, word_text, word_text_rhs, json);
    if (app.got_subcommand(verify_cmd)) return run_verify(presentation, n, json);
    if (app.got_subcommand(count_cmd)) return run_count(n, unsigned_flag, json);
    if (app.got_subcommand(enum_cmd)) return run_enumerate(n, unsigned_flag, json);
    if (app.got_subcommand(nf_cmd)) return run_normal_form(n, element_text, json);
    if (app.got_subcommand(ab_cmd)) return run_abelianize(word_text, opt_n, mod2, json);
    if (app.got_subcommand(render_cmd)) return run_render(n, word_text, format, json);
  } catch (const ibb::CapExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const ibb::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
