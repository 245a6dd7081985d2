/**
 * This code is part of lonsim.
 *
 * (C) Copyright the lonsim developers 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license in the LICENSE.txt file in the root directory
 * of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lonsim/cli_commands.hpp"
#include "lonsim/version.hpp"

namespace {

void add_global_options(CLI::App* cmd, lonsim::cli::GlobalOptions& global) {
  cmd->add_option("--seed", global.seed, "Master seed for every random draw")
      ->capture_default_str();
  cmd->add_option("--out", global.out_dir,
                  "Directory that receives a copy of the rendered output");
  cmd->add_option("--format", global.format, "Output format: csv or json")
      ->capture_default_str();
  cmd->add_option("--shots", global.shots,
                  "Shots per measurement setting; 0 uses exact values")
      ->capture_default_str();
  cmd->add_option("--detector-model", global.detector_model,
                  "Click statistics model: ideal or splitting")
      ->capture_default_str();
  cmd->add_option("--frame-cache", global.frame_cache,
                  "Directory for cached frames (LONSIM_FRAME_CACHE otherwise)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "lonsim: multiphoton interference invariants for linear optical "
      "networks"};
  app.set_version_flag("--version", std::string(lonsim::kVersion));
  app.require_subcommand(1);

  lonsim::cli::TableS1Options table_s1;
  CLI::App* cmd_table = app.add_subcommand(
      "table-s1",
      "Nine-row preparation benchmark against the bundled references");
  add_global_options(cmd_table, table_s1.global);
  cmd_table
      ->add_option("--precision", table_s1.precision,
                   "Decimals shown for value columns")
      ->capture_default_str();

  lonsim::cli::Fig3Options fig3;
  CLI::App* cmd_fig3 = app.add_subcommand(
      "fig3-theory", "Invariant theory curves over the mixing angle");
  add_global_options(cmd_fig3, fig3.global);
  cmd_fig3->add_option("--alpha-min", fig3.alpha_min_deg,
                       "Smallest mixing angle in degrees")
      ->capture_default_str();
  cmd_fig3->add_option("--alpha-max", fig3.alpha_max_deg,
                       "Largest mixing angle in degrees")
      ->capture_default_str();
  cmd_fig3->add_option("--points", fig3.points, "Grid point count")
      ->capture_default_str();

  lonsim::cli::ConserveOptions conserve;
  CLI::App* cmd_cons = app.add_subcommand(
      "conserve",
      "Invariant conservation across prepared states and evolutions");
  add_global_options(cmd_cons, conserve.global);
  cmd_cons->add_option("--unitaries", conserve.unitaries,
                       "Evolution set: table-s2 or haar")
      ->capture_default_str();
  cmd_cons->add_option("--haar-count", conserve.haar_count,
                       "Unitary count for the haar set")
      ->capture_default_str();
  cmd_cons->add_option("--methods", conserve.methods,
                       "Any of: exact tomo direct")
      ->capture_default_str();

  lonsim::cli::InvariantsOptions inv_opts;
  CLI::App* cmd_inv = app.add_subcommand(
      "invariants", "Invariant set of a density matrix JSON file");
  add_global_options(cmd_inv, inv_opts.global);
  cmd_inv->add_option("--state", inv_opts.state_file,
                      "Density state JSON file");

  lonsim::cli::PrepareOptions prepare;
  CLI::App* cmd_prep = app.add_subcommand(
      "prepare", "Post-selected two-photon states for preparation angles");
  add_global_options(cmd_prep, prepare.global);
  cmd_prep->add_option("--theta", prepare.theta_deg,
                       "Preparation angles in degrees");

  lonsim::cli::TomoSimulateOptions tomo_sim;
  CLI::App* cmd_tsim = app.add_subcommand(
      "tomo-simulate", "Click counts for the six benchmark plate settings");
  add_global_options(cmd_tsim, tomo_sim.global);
  cmd_tsim->add_option("--theta", tomo_sim.theta_deg,
                       "Preparation angle in degrees")
      ->capture_default_str();
  cmd_tsim->add_option("--unitary", tomo_sim.unitary,
                       "Named evolution from the bundled set, e.g. U3");

  lonsim::cli::TomoReconstructOptions tomo_rec;
  CLI::App* cmd_trec = app.add_subcommand(
      "tomo-reconstruct", "Density matrix from a count-record JSON file");
  add_global_options(cmd_trec, tomo_rec.global);
  cmd_trec->add_option("--counts", tomo_rec.counts_file,
                       "Count record JSON file");
  cmd_trec->add_option("--method", tomo_rec.method,
                       "Reconstruction: linear or constrained")
      ->capture_default_str();
  cmd_trec->add_option("--reference", tomo_rec.reference_file,
                       "Reference state JSON for a fidelity column");

  lonsim::cli::SampleU2Options sample;
  CLI::App* cmd_samp = app.add_subcommand(
      "sample-u2", "Two-mode unitaries with parameters and plate angles");
  add_global_options(cmd_samp, sample.global);
  cmd_samp->add_option("--set", sample.set, "table-s2 or haar")
      ->capture_default_str();
  cmd_samp->add_option("--count", sample.count, "Sample count for haar")
      ->capture_default_str();

  lonsim::cli::DipFitOptions dip;
  CLI::App* cmd_dip = app.add_subcommand(
      "dip-fit", "Interference-dip model fit to scan data");
  add_global_options(cmd_dip, dip.global);
  cmd_dip->add_option("--data", dip.data_file,
                      "Two-column delay/rate file, CSV or JSON; a seeded "
                      "demo scan is synthesized when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? lonsim::cli::kExitOk : lonsim::cli::kExitInputError;
  }

  if (cmd_table->parsed()) return lonsim::cli::cmd_table_s1(table_s1, std::cout);
  if (cmd_fig3->parsed()) return lonsim::cli::cmd_fig3_theory(fig3, std::cout);
  if (cmd_cons->parsed()) return lonsim::cli::cmd_conserve(conserve, std::cout);
  if (cmd_inv->parsed()) return lonsim::cli::cmd_invariants(inv_opts, std::cout);
  if (cmd_prep->parsed()) return lonsim::cli::cmd_prepare(prepare, std::cout);
  if (cmd_tsim->parsed()) {
    return lonsim::cli::cmd_tomo_simulate(tomo_sim, std::cout);
  }
  if (cmd_trec->parsed()) {
    return lonsim::cli::cmd_tomo_reconstruct(tomo_rec, std::cout);
  }
  if (cmd_samp->parsed()) return lonsim::cli::cmd_sample_u2(sample, std::cout);
  if (cmd_dip->parsed()) return lonsim::cli::cmd_dip_fit(dip, std::cout);
  std::cerr << "error: no subcommand selected\n";
  return lonsim::cli::kExitInputError;
}
