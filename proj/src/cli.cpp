#include "tabcompare/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tabcompare/digest.hpp"
#include "tabcompare/document.hpp"
#include "tabcompare/server.hpp"
#include "tabcompare/tabtext.hpp"

namespace tabcompare {

namespace {

namespace fs = std::filesystem;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot read file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Score parse_file(const std::string& path, const std::string& bytes) {
  try {
    return parse_any(bytes);
  } catch (const ParseError& e) {
    std::string message = path + ":" + e.what();
    if (!e.snippet().empty()) message += "\n  " + e.snippet();
    throw InputError(message);
  }
}

std::vector<int> parse_track_list(const std::string& text, std::size_t count) {
  std::vector<int> tracks;
  if (text.empty()) return std::vector<int>(count, 0);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int value = -1;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || value < 0) throw InputError("--track: invalid index '" + item + "'");
    tracks.push_back(value);
  }
  if (tracks.size() != count) {
    throw InputError("--track lists " + std::to_string(tracks.size()) + " indices for " +
                     std::to_string(count) + " files");
  }
  return tracks;
}

struct AnalyzeArgs {
  std::vector<std::string> files;
  std::string tracks;
  double gap_cost = AlignParams{}.gap_cost;
  double scale_length = kDefaultScaleLengthMm;
  double wc = FeatureWeights{}.chroma;
  double wo = FeatureWeights{}.onset;
  std::string out;
};

int analyze(const AnalyzeArgs& a, std::ostream& out) {
  if (a.files.size() < 2) throw ConfigError("need at least 2 versions");
  const std::vector<int> tracks = parse_track_list(a.tracks, a.files.size());
  RunOptions options;
  options.align.gap_cost = a.gap_cost;
  options.weights = {a.wc, a.wo};
  options.scale_length_mm = a.scale_length;
  std::vector<Score> scores;
  for (std::size_t i = 0; i < a.files.size(); ++i) {
    const std::string bytes = read_file(a.files[i]);
    scores.push_back(parse_file(a.files[i], bytes));
    options.versions.push_back(
        {sha256_hex(bytes), fs::path(a.files[i]).filename().string(), tracks[i]});
  }
  const std::string text = write_document(build_document(scores, options));
  if (a.out.empty() || a.out == "-") {
    out << text;
  } else {
    std::ofstream file(a.out, std::ios::binary | std::ios::trunc);
    file << text;
    if (!file) throw InputError(a.out + ": cannot write file");
  }
  return kExitOk;
}

int tracks(const std::string& path, std::ostream& out) {
  const Score score = parse_file(path, read_file(path));
  for (const TrackSummary& t : summarize_tracks(score)) {
    out << t.index << '\t' << t.name << '\t' << t.num_strings << '\t' << t.num_bars << '\n';
  }
  return kExitOk;
}

struct ServeArgs {
  int port = 8080;
  std::string host = "127.0.0.1";
  std::string data_dir;
  std::string ui_dir;
};

int serve(const ServeArgs& a, std::ostream& out, std::ostream& err) {
  Store store(a.data_dir.empty() ? std::nullopt : std::optional<fs::path>(a.data_dir));
  ServiceOptions options;
  if (!a.ui_dir.empty()) options.ui_dir = a.ui_dir;
  Service service(store, options);
  if (!service.bind(a.host, a.port)) {
    err << "tabcompare: cannot listen on " << a.host << ":" << a.port << "\n";
    return kExitInputError;
  }
  out << "listening on http://" << a.host << ":" << service.port() << std::endl;
  service.run();
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compare guitar tablature versions bar by bar", "tabcompare"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Align versions and write a comparison document");
  analyze_cmd->add_option("files", analyze_args.files, ".tabtxt or canonical score files")->required();
  analyze_cmd->add_option("--track", analyze_args.tracks, "Track index per file, comma separated");
  analyze_cmd->add_option("--gap-cost", analyze_args.gap_cost, "Cost of an inserted empty bar");
  analyze_cmd->add_option("--scale-length", analyze_args.scale_length, "Scale length in mm");
  analyze_cmd->add_option("--wc", analyze_args.wc, "Chroma feature weight");
  analyze_cmd->add_option("--wo", analyze_args.wo, "Onset feature weight");
  analyze_cmd->add_option("--out", analyze_args.out, "Output path (default stdout)");

  std::string tracks_file;
  auto* tracks_cmd = app.add_subcommand("tracks", "List the tracks of a file");
  tracks_cmd->add_option("file", tracks_file)->required();

  ServeArgs serve_args;
  if (const char* env = std::getenv("TABCOMPARE_PORT")) {
    try {
      serve_args.port = std::stoi(env);
    } catch (const std::exception&) {
      err << "tabcompare: ignoring invalid TABCOMPARE_PORT '" << env << "'\n";
    }
  }
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  serve_cmd->add_option("--port", serve_args.port, "Port (default $TABCOMPARE_PORT or 8080)");
  serve_cmd->add_option("--host", serve_args.host, "Interface to bind");
  serve_cmd->add_option("--data-dir", serve_args.data_dir, "Persist uploads and documents here");
  serve_cmd->add_option("--ui-dir", serve_args.ui_dir, "Static UI bundle to serve at /");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (analyze_cmd->parsed()) return analyze(analyze_args, out);
    if (tracks_cmd->parsed()) return tracks(tracks_file, out);
    if (serve_cmd->parsed()) return serve(serve_args, out, err);
  } catch (const InputError& e) {
    err << "tabcompare: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ConfigError& e) {
    err << "tabcompare: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "tabcompare: internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitInputError;
}

}  // namespace tabcompare
