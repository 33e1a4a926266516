// command-line front end; talks to the library through the C API only
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "powerag.h"

namespace {

struct CodeGuard {
  powerag_code* code = nullptr;
  ~CodeGuard() { powerag_code_free(code); }
};

int die(const std::string& context) {
  std::cerr << "powerag: " << context << ": " << powerag_last_error() << "\n";
  return 1;
}

int load(const std::string& config, CodeGuard& guard) {
  if (powerag_code_from_file(config.c_str(), &guard.code) != POWERAG_OK)
    return die("loading '" + config + "'");
  return 0;
}

std::vector<uint16_t> parse_list(const std::string& text, bool& ok) {
  std::vector<uint16_t> out;
  std::string token;
  std::istringstream in(text);
  ok = true;
  while (std::getline(in, token, ',')) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(token, &pos);
      while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
      if (pos != token.size() || v < 0 || v > 0xFFFF) throw std::invalid_argument(token);
      out.push_back(static_cast<uint16_t>(v));
    } catch (const std::exception&) {
      ok = false;
      return out;
    }
  }
  return out;
}

void print_list(const std::vector<uint16_t>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"power decoding of one-point algebraic geometry codes"};
  app.require_subcommand(1);

  std::string config, message_text, received_path, out_path, mode = "fixed", format = "csv";
  int ell = 1, s = -1, lambda = -1, trials = 100;
  std::uint64_t seed = 0;
  std::vector<int> taus;

  auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("--config", config, "JSON code description")->required();
  };
  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--ell", ell, "number of powered key equations")->required();
    cmd->add_option("--s", s, "locator root multiplicity (default: suggested)");
  };

  CLI::App* info = app.add_subcommand("info", "print code parameters");
  add_config(info);

  CLI::App* enc = app.add_subcommand("encode", "encode a message");
  add_config(enc);
  enc->add_option("--message", message_text, "comma-separated message coordinates")->required();

  CLI::App* rad = app.add_subcommand("radius", "print decoding radii");
  add_config(rad);
  add_params(rad);
  bool only_exact = false, only_closed = false;
  rad->add_flag("--exact", only_exact, "print only the exact radius");
  rad->add_flag("--closed", only_closed, "print only the closed-form radius");

  CLI::App* dec = app.add_subcommand("decode", "decode a received word");
  add_config(dec);
  add_params(dec);
  dec->add_option("--received", received_path, "file with comma-separated symbols")->required();
  dec->add_option("--mode", mode, "iterative | fixed")->check(CLI::IsMember({"iterative", "fixed"}));
  dec->add_option("--lambda", lambda, "fixed-mode degree bound override");

  CLI::App* sim = app.add_subcommand("simulate", "estimate the failure rate");
  add_config(sim);
  add_params(sim);
  sim->add_option("--tau", taus, "error weight (repeatable)")->required();
  sim->add_option("--trials", trials, "trials per error weight");
  sim->add_option("--seed", seed, "base seed");
  sim->add_option("--out", out_path, "write the report here instead of stdout");
  sim->add_option("--format", format, "csv | markdown")->check(CLI::IsMember({"csv", "markdown"}));

  CLI11_PARSE(app, argc, argv);

  CodeGuard guard;
  if (load(config, guard)) return 1;
  powerag_code* code = guard.code;

  if (s < 0 && (rad->parsed() || dec->parsed() || sim->parsed())) {
    if (powerag_suggest_multiplicity(code, ell, &s) != POWERAG_OK)
      return die("choosing a multiplicity");
    std::cerr << "powerag: using multiplicity s=" << s << "\n";
  }
  powerag_decoder_params params{ell, s, mode == "iterative" ? 1 : 0, lambda};

  if (info->parsed()) {
    std::cout << "n " << powerag_code_length(code) << "\nk " << powerag_code_dimension(code)
              << "\ndstar " << powerag_code_distance(code) << "\ngamma "
              << powerag_code_gamma(code) << "\ngenus " << powerag_code_genus(code)
              << "\nfield " << powerag_code_field_size(code) << "\n";
    return 0;
  }

  if (enc->parsed()) {
    bool ok = false;
    auto msg = parse_list(message_text, ok);
    if (!ok) {
      std::cerr << "powerag: cannot parse --message\n";
      return 1;
    }
    std::vector<uint16_t> word(powerag_code_length(code));
    if (powerag_encode(code, msg.data(), msg.size(), word.data()) != POWERAG_OK)
      return die("encoding");
    print_list(word);
    return 0;
  }

  if (rad->parsed()) {
    int exact = 0, closed = 0;
    if (powerag_radius_exact(code, &params, &exact) != POWERAG_OK) return die("exact radius");
    if (powerag_radius_closed_form(code, &params, &closed) != POWERAG_OK)
      return die("closed-form radius");
    if (only_exact)
      std::cout << exact << "\n";
    else if (only_closed)
      std::cout << closed << "\n";
    else
      std::cout << "exact " << exact << "\nclosed " << closed << "\n";
    return 0;
  }

  if (dec->parsed()) {
    std::ifstream in(received_path);
    if (!in) {
      std::cerr << "powerag: cannot open '" << received_path << "'\n";
      return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    // tolerate whitespace-separated entries
    std::string cleaned;
    for (char c : buf.str()) {
      if (std::isspace(static_cast<unsigned char>(c))) c = ',';
      if (c == ',' && (cleaned.empty() || cleaned.back() == ',')) continue;
      cleaned.push_back(c);
    }
    while (!cleaned.empty() && cleaned.back() == ',') cleaned.pop_back();
    bool ok = false;
    auto received = parse_list(cleaned, ok);
    if (!ok) {
      std::cerr << "powerag: cannot parse received word\n";
      return 1;
    }
    std::vector<uint16_t> msg(powerag_code_dimension(code));
    powerag_decode_info dinfo;
    powerag_status st =
        powerag_decode(code, received.data(), received.size(), &params, msg.data(), &dinfo);
    if (st == POWERAG_OK) {
      print_list(msg);
      std::cerr << "powerag: corrected weight " << dinfo.error_weight << " at lambda "
                << dinfo.lambda_used << "\n";
      return 0;
    }
    if (st == POWERAG_ERR_DECODE) {
      std::cout << "decoding failure\n";
      return 2;
    }
    return die("decoding");
  }

  if (sim->parsed()) {
    char* report = nullptr;
    if (powerag_simulate_report(code, &params, taus.data(), taus.size(), trials, seed,
                                format == "markdown" ? 1 : 0, &report) != POWERAG_OK)
      return die("simulation");
    std::string text(report);
    powerag_string_free(report);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "powerag: cannot write '" << out_path << "'\n";
        return 1;
      }
      out << text;
    }
    return 0;
  }

  return 0;
}
