// varlex: annotate, parse and evaluate variant mentions from the command line.
//
//   varlex annotate [INPUT] [--kb PATH] [--genes PATH] [--policy LIST]
//                   [--no-group] [--threads N] [--format pubtator|text] [-o OUT]
//   varlex parse SURFACE [--type TYPE]
//   varlex evaluate GOLD PRED [--mode span|type|id]
//
// Exit status: 0 success, 1 processing error, 2 usage or file error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "varlex/varlex.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kProcessingError = 1;
constexpr int kUsageError = 2;

struct UsageError : varlex::Error {
  using varlex::Error::Error;
};

std::vector<varlex::Document> read_documents(const std::string& path, bool plain_text) {
  auto read = [&](std::istream& in) {
    return plain_text ? varlex::documents_from_text(in) : varlex::read_pubtator(in);
  };
  if (path == "-") return read(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw varlex::FileUnreadable(path);
  return read(in);
}

template <class T>
std::string opt_str(const std::optional<T>& v) {
  if (!v) return "-";
  std::ostringstream s;
  s << *v;
  return s.str();
}

void dump(std::ostream& out, const varlex::VariantDescriptor& d) {
  out << "level: " << varlex::level_name(d.level) << '\n'
      << "edit: " << varlex::edit_name(d.edit) << '\n'
      << "position: " << opt_str(d.position) << '\n'
      << "position_end: " << opt_str(d.position_end) << '\n'
      << "ref: " << opt_str(d.ref_allele) << '\n'
      << "alt: " << opt_str(d.alt_allele) << '\n';
  if (d.size) out << "size: " << *d.size << ' ' << varlex::unit_name(*d.size_unit) << '\n';
}

void dump(std::ostream& out, const varlex::RegionDescriptor& r) {
  out << "kind: " << varlex::region_kind_name(r.kind) << '\n'
      << "chromosome: " << r.chromosome << '\n'
      << "band: " << opt_str(r.arm_band) << '\n'
      << "start: " << opt_str(r.start_bp) << '\n'
      << "end: " << opt_str(r.end_bp) << '\n';
}

void dump(std::ostream& out, const varlex::Accession& a) { out << "id: " << a.id << '\n'; }

int cmd_annotate(const varlex::PipelineConfig& config, const std::string& input, bool plain_text,
                 const std::string& output) {
  const auto pipeline = varlex::Pipeline::from_config(config);
  const auto docs = read_documents(input, plain_text);
  const auto annotated = pipeline.annotate_all(docs, config.threads);
  if (output == "-") {
    varlex::write_pubtator(std::cout, annotated);
    std::cout.flush();
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw varlex::FileUnreadable(output);
    varlex::write_pubtator(out, annotated);
  }
  return kOk;
}

int cmd_parse(const std::string& surface, const std::string& type_hint) {
  varlex::ParsedSurface parsed;
  if (type_hint.empty()) {
    parsed = varlex::classify(surface);
  } else {
    const auto type = varlex::parse_mention_type(type_hint);
    if (!type) throw UsageError("unknown mention type '" + type_hint + "'");
    parsed.type = *type;
    parsed.descriptor = varlex::parse_descriptor(surface, *type);
  }
  std::cout << "type: " << varlex::type_name(parsed.type) << '\n';
  std::visit([](const auto& d) { dump(std::cout, d); }, parsed.descriptor);
  std::visit([](const auto& d) { std::cout << "canonical: " << varlex::canonical_string(d) << '\n'; },
             parsed.descriptor);
  return kOk;
}

int cmd_evaluate(const std::string& gold_path, const std::string& pred_path, varlex::EvalMode mode) {
  const auto gold = read_documents(gold_path, false);
  const auto pred = read_documents(pred_path, false);
  std::cout << varlex::evaluate(gold, pred, mode).format() << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variant mention recognition, normalization and evaluation"};
  app.require_subcommand(1);

  varlex::PipelineConfig config;
  std::string kb_path, genes_path, policy = "caid,rs_allele,rsid,gene";
  std::string input = "-", output = "-", format = "pubtator";
  bool no_group = false;

  auto* annotate = app.add_subcommand("annotate", "Annotate PubTator or plain-text documents");
  annotate->add_option("input", input, "Input file, '-' for standard input")->capture_default_str();
  annotate->add_option("--kb", kb_path, "Variant knowledge base (TSV)")->envname("VARLEX_KB");
  annotate->add_option("--genes", genes_path, "Gene symbol lexicon, one symbol per line");
  annotate->add_option("--policy", policy, "Identifier preference order")->capture_default_str();
  annotate->add_flag("--no-group", no_group, "Disable within-document grouping");
  annotate->add_option("--threads", config.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  annotate->add_option("--format", format, "Input format")
      ->check(CLI::IsMember({"pubtator", "text"}))
      ->capture_default_str();
  annotate->add_option("-o,--output", output, "Output file, '-' for standard output")
      ->capture_default_str();

  std::string surface, type_hint;
  auto* parse = app.add_subcommand("parse", "Parse one variant string and print its descriptor");
  parse->add_option("surface", surface, "Variant text, e.g. p.Gln659Leu")->required();
  parse->add_option("--type", type_hint, "Force a mention type, e.g. PROTEIN_MUTATION");

  std::string gold_path, pred_path, mode = "id";
  auto* evaluate = app.add_subcommand("evaluate", "Score predicted annotations against gold");
  evaluate->add_option("gold", gold_path, "Gold PubTator file")->required();
  evaluate->add_option("pred", pred_path, "Predicted PubTator file")->required();
  evaluate->add_option("--mode", mode, "Matching criterion")
      ->check(CLI::IsMember({"span", "type", "id"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*annotate) {
      if (!kb_path.empty()) config.kb_path = kb_path;
      if (!genes_path.empty()) config.gene_lexicon_path = genes_path;
      try {
        config.policy = varlex::NormalizationPolicy::parse(policy);
      } catch (const varlex::Error& e) {
        throw UsageError(e.what());
      }
      config.enable_grouping = !no_group;
      return cmd_annotate(config, input, format == "text", output);
    }
    if (*parse) return cmd_parse(surface, type_hint);
    if (*evaluate) return cmd_evaluate(gold_path, pred_path, *varlex::parse_eval_mode(mode));
  } catch (const varlex::FileUnreadable& e) {
    std::cerr << "varlex: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    std::cerr << "varlex: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "varlex: " << e.what() << '\n';
    return kProcessingError;
  }
  return kUsageError;
}
