#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "schubert.h"

namespace {

// prints the document (raw JSON or rendered table), frees it, maps the
// status to the exit code: 0 ok, 2 verification mismatch, 1 anything else
int finish(schubert_status st, char* out, const std::string& format) {
  if (out != nullptr) {
    if (format == "table") {
      char* text = nullptr;
      if (schubert_render_table(out, &text) == SCHUBERT_OK) {
        std::fputs(text, stdout);
        schubert_string_free(text);
      } else {
        std::fputs(out, stdout);
        std::fputc('\n', stdout);
      }
    } else {
      std::fputs(out, stdout);
      std::fputc('\n', stdout);
    }
    schubert_string_free(out);
  }
  if (st == SCHUBERT_OK) return 0;
  std::fprintf(stderr, "error: %s\n", schubert_last_error());
  return st == SCHUBERT_ERR_VERIFICATION ? 2 : 1;
}

std::vector<long long> parse_weight(const std::string& s, int rank) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    size_t used = 0;
    out.push_back(std::stoll(piece, &used));
    if (used != piece.size()) throw std::invalid_argument("bad weight entry");
  }
  if (static_cast<int>(out.size()) != rank)
    throw std::invalid_argument("weight has " + std::to_string(out.size()) +
                                " coordinates, rank is " + std::to_string(rank));
  return out;
}

struct RootsysHandle {
  schubert_rootsys* rs = nullptr;
  ~RootsysHandle() { schubert_rootsys_destroy(rs); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Lie-theoretic engine for the affine Schubert smoothness tables"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "table"}));

  std::string type, weight_str, case_str, check = "all", input;
  int rank = 0, l = 1, tower = 0, order = 2, n = 0;
  int max_rank = 6, coord_bound = 4;
  unsigned seed = 0;

  CLI::App* classify = app.add_subcommand("classify", "regenerate the classification tables");
  classify->add_option("--max-rank", max_rank, "largest dual rank scanned");
  classify->add_option("--coord-bound", coord_bound, "weight coordinate bound");

  CLI::App* wmf = app.add_subcommand(
      "wmf", "weight-multiplicity-freeness of one weight, or the full scan");
  wmf->add_option("--type", type, "type label, e.g. C3 (or C with --rank)");
  wmf->add_option("--rank", rank);
  wmf->add_option("--weight", weight_str, "fundamental coordinates c1,c2,...");
  wmf->add_option("--max-rank", max_rank, "scan bound when no --type is given");
  wmf->add_option("--coord-bound", coord_bound);

  CLI::App* mult = app.add_subcommand("mult", "dominant weight multiplicities");
  mult->add_option("--type", type)->required();
  mult->add_option("--rank", rank);
  mult->add_option("--weight", weight_str)->required();

  CLI::App* fold = app.add_subcommand("fold", "diagram folding and the case table");
  fold->add_option("--type", type, "source type label");
  fold->add_option("--rank", rank);
  fold->add_option("--order", order, "automorphism order 1|2|3");
  fold->add_option("--case", case_str, "family name, e.g. C-BC_3");
  fold->add_option("--n", n, "family parameter when --case has no suffix");

  CLI::App* kumar = app.add_subcommand("kumar", "nil-Hecke smoothness at a tower level");
  kumar->add_option("--case", case_str, "A or B");
  kumar->add_option("--l", l, "tower level");
  kumar->add_option("--tower", tower, "run both cases for l = 1..N");

  CLI::App* triality = app.add_subcommand("triality", "ramified triality checks");
  triality->add_option("--check", check,
                       "all|smith|matrix|orthogonality|sigma|dimension|commute|injectivity");
  triality->add_option("--seed", seed, "seed for the randomized probe");

  CLI::App* smith = app.add_subcommand("smith", "Smith valuations of a Laurent matrix");
  smith->add_option("--input", input, "matrix JSON file, or - for stdin")->required();

  for (CLI::App* sub : {classify, wmf, mult, fold, kumar, triality, smith})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  // out must be read after the call that fills it, never in the same
  // full expression (argument evaluation order is unspecified)
  char* out = nullptr;
  schubert_status st = SCHUBERT_OK;
  try {
    if (classify->parsed()) {
      st = schubert_classify_json(max_rank, coord_bound, &out);
      return finish(st, out, format);
    }

    if (wmf->parsed()) {
      if (type.empty()) {
        st = schubert_howe_json(max_rank, coord_bound, &out);
        return finish(st, out, format);
      }
      RootsysHandle h;
      st = schubert_rootsys_create(type.c_str(), rank, &h.rs);
      if (st != SCHUBERT_OK) return finish(st, nullptr, format);
      std::vector<long long> w = parse_weight(weight_str, schubert_rootsys_rank(h.rs));
      st = schubert_wmf_json(h.rs, w.data(), &out);
      return finish(st, out, format);
    }

    if (mult->parsed()) {
      RootsysHandle h;
      st = schubert_rootsys_create(type.c_str(), rank, &h.rs);
      if (st != SCHUBERT_OK) return finish(st, nullptr, format);
      std::vector<long long> w = parse_weight(weight_str, schubert_rootsys_rank(h.rs));
      st = schubert_mult_table_json(h.rs, w.data(), &out);
      return finish(st, out, format);
    }

    if (fold->parsed()) {
      if (!case_str.empty()) {
        st = schubert_fold_case_json(case_str.c_str(), n, &out);
        return finish(st, out, format);
      }
      if (type.empty()) {
        std::fprintf(stderr, "error: fold needs --type or --case\n");
        return 1;
      }
      st = schubert_fold_json(type.c_str(), rank, order, &out);
      return finish(st, out, format);
    }

    if (kumar->parsed()) {
      if (tower > 0) {
        st = schubert_pu3_tower_json(tower, &out);
        return finish(st, out, format);
      }
      if (case_str.empty()) {
        std::fprintf(stderr, "error: kumar needs --case A|B or --tower N\n");
        return 1;
      }
      st = schubert_kumar_json(case_str.c_str(), l, &out);
      return finish(st, out, format);
    }

    if (triality->parsed()) {
      st = schubert_triality_json(check.c_str(), seed, &out);
      return finish(st, out, format);
    }

    if (smith->parsed()) {
      std::string doc;
      if (input == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        doc = ss.str();
      } else {
        std::ifstream f(input);
        if (!f) {
          std::fprintf(stderr, "error: cannot read %s\n", input.c_str());
          return 1;
        }
        std::ostringstream ss;
        ss << f.rdbuf();
        doc = ss.str();
      }
      st = schubert_smith_json(doc.c_str(), &out);
      return finish(st, out, format);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
