#include "motzkin/cli.hpp"

#include <map>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>

#include "motzkin/error.hpp"
#include "motzkin/numbers.hpp"
#include "motzkin/series.hpp"
#include "motzkin/symdiff.hpp"
#include "motzkin/verify.hpp"
#include "motzkin/words.hpp"

namespace motzkin::cli {

namespace {

template <typename Values>
void print_table(const Values& values, bool bfile, std::ostream& out) {
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (bfile) out << n << ' ';
    out << values[n] << '\n';
  }
}

BigNat parse_index(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw CLI::ValidationError("--index", "expected a nonnegative decimal integer");
  }
  return BigNat(text);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Motzkin words, difference numbers and their generating functions", "motzkin"};
  app.require_subcommand(1);

  std::size_t max = 0;
  bool bfile = false;

  auto* numbers = app.add_subcommand("numbers", "Motzkin numbers M_0..M_N");
  numbers->add_option("--max", max, "largest index N")->required();
  numbers->add_flag("--bfile", bfile, "print \"n value\" lines");

  std::string diff_method = "subtraction";
  auto* diff = app.add_subcommand("diff", "difference numbers U_0..U_N");
  diff->add_option("--max", max, "largest index N")->required();
  diff->add_option("--method", diff_method)->check(CLI::IsMember({"subtraction", "convolution"}));
  diff->add_flag("--bfile", bfile, "print \"n value\" lines");

  std::size_t length = 0;
  std::string filter = "all";
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Motzkin words of one length in order");
  enumerate_cmd->add_option("--length", length)->required();
  enumerate_cmd->add_option("--filter", filter)->check(CLI::IsMember({"all", "unique", "inherited"}));

  std::string word_text;
  auto* rank_cmd = app.add_subcommand("rank", "position of a unique word");
  rank_cmd->add_option("--word", word_text)->required();

  std::string index_text;
  auto* unrank_cmd = app.add_subcommand("unrank", "unique word at a position");
  unrank_cmd->add_option("--index", index_text)->required();

  std::string target;
  std::string series_method;
  auto* series_cmd = app.add_subcommand("series", "generating-function coefficients 0..N");
  series_cmd->add_option("--target", target)->required()->check(CLI::IsMember({"motzkin", "nat"}));
  series_cmd->add_option("--order", max)->required();
  series_cmd->add_option("--method", series_method)
      ->check(CLI::IsMember({"functional", "closed", "product", "linear"}));

  auto* symdiff_cmd = app.add_subcommand("symdiff", "U_0..U_K by repeated symbolic differentiation");
  symdiff_cmd->add_option("--max", max)->required();

  std::size_t verify_max = 12;
  auto* verify_cmd = app.add_subcommand("verify", "cross-check every method");
  verify_cmd->add_option("--max", verify_max)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*numbers) {
      print_table(motzkin_numbers(max).values, bfile, out);
    } else if (*diff) {
      const auto method = diff_method == "convolution" ? DifferenceMethod::Convolution
                                                       : DifferenceMethod::Subtraction;
      print_table(difference_numbers(max, method).values, bfile, out);
    } else if (*enumerate_cmd) {
      static const std::map<std::string, WordFilter> filters = {
          {"all", WordFilter::All}, {"unique", WordFilter::Unique}, {"inherited", WordFilter::Inherited}};
      const auto words = enumerate(length, filters.at(filter));
      for (const auto& w : words) out << w.text() << '\n';
      out << "count=" << words.size() << '\n';
    } else if (*rank_cmd) {
      out << rank(validate(word_text)) << '\n';
    } else if (*unrank_cmd) {
      out << unrank(parse_index(index_text)).text() << '\n';
    } else if (*series_cmd) {
      TruncatedSeries s(0);
      if (target == "motzkin") {
        if (series_method.empty() || series_method == "functional") {
          s = motzkin_series(max, MotzkinMethod::Functional);
        } else if (series_method == "closed") {
          s = motzkin_series(max, MotzkinMethod::ClosedForm);
        } else {
          err << "--method " << series_method << " does not apply to --target motzkin\n";
          return kExitUsage;
        }
      } else {
        if (series_method.empty() || series_method == "product") {
          s = nat_series(max, NatForm::Product);
        } else if (series_method == "linear") {
          s = nat_series(max, NatForm::Linear);
        } else {
          err << "--method " << series_method << " does not apply to --target nat\n";
          return kExitUsage;
        }
      }
      print_table(s.coefficients(), false, out);
    } else if (*symdiff_cmd) {
      print_table(nat_coefficients(max), false, out);
    } else if (*verify_cmd) {
      const bool ok = print_report(check_tables(compute_tables(verify_max)), out);
      return ok ? kExitOk : kExitVerifyFailed;
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return e.code() == ErrorCode::Internal ? kExitVerifyFailed : kExitUsage;
  }
  return kExitOk;
}

}  // namespace motzkin::cli
