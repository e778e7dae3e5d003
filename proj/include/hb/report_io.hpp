#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hb/evaluate.hpp"
#include "hb/io.hpp"

namespace hb {

// Flat CSV, one row per report.
inline std::string eval_csv(const std::vector<eval_report>& reports) {
  std::string out = "alpha_th,z_th,mode,tp,fp,n_pred,n_ref,tpr,fpr,precision,recall\n";
  for (const auto& r : reports) {
    out += fmt_double(r.alpha_th);
    out += ',';
    out += fmt_double(r.z_th);
    out += ',';
    out += to_string(r.mode);
    out += ',';
    out += std::to_string(r.tp);
    out += ',';
    out += std::to_string(r.fp);
    out += ',';
    out += std::to_string(r.n_predicted);
    out += ',';
    out += std::to_string(r.n_reference);
    out += ',';
    out += fmt_double(r.tpr);
    out += ',';
    out += fmt_double(r.fpr);
    out += ',';
    out += fmt_double(r.precision);
    out += ',';
    out += fmt_double(r.recall);
    out += '\n';
  }
  return out;
}

// One JSON object per report, with the full field set.
inline std::string eval_jsonl(const std::vector<eval_report>& reports) {
  std::string out;
  for (const auto& r : reports) {
    nlohmann::json j{{"mode", to_string(r.mode)},
                     {"alpha_th", r.alpha_th},
                     {"z_th", r.z_th},
                     {"ensemble", r.ensemble},
                     {"tp", r.tp},
                     {"fp", r.fp},
                     {"n_pred", r.n_predicted},
                     {"n_ref", r.n_reference},
                     {"n_negatives", r.n_negatives},
                     {"recovered", r.recovered},
                     {"tpr", r.tpr},
                     {"fpr", r.fpr},
                     {"precision", r.precision},
                     {"recall", r.recall},
                     {"empty_prediction", r.empty_prediction},
                     {"unknown_tags", r.unknown_tags}};
    out += j.dump();
    out += '\n';
  }
  return out;
}

inline std::string aggregate_csv(const std::vector<eval_aggregate>& aggregates) {
  std::string out =
      "alpha_th,z_th,mode,n,tpr_mean,tpr_stderr,fpr_mean,fpr_stderr,"
      "precision_mean,precision_stderr,recall_mean,recall_stderr\n";
  for (const auto& a : aggregates) {
    out += fmt_double(a.alpha_th);
    out += ',';
    out += fmt_double(a.z_th);
    out += ',';
    out += to_string(a.mode);
    out += ',';
    out += std::to_string(a.n);
    out += ',';
    out += fmt_double(a.tpr_mean);
    out += ',';
    out += fmt_double(a.tpr_stderr);
    out += ',';
    out += fmt_double(a.fpr_mean);
    out += ',';
    out += fmt_double(a.fpr_stderr);
    out += ',';
    out += fmt_double(a.precision_mean);
    out += ',';
    out += fmt_double(a.precision_stderr);
    out += ',';
    out += fmt_double(a.recall_mean);
    out += ',';
    out += fmt_double(a.recall_stderr);
    out += '\n';
  }
  return out;
}

}  // namespace hb
