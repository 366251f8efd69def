#include "discord/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace discord {

namespace {

nlohmann::json entries_to_json(const Mat& m) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      arr.push_back({m(i, j).real(), m(i, j).imag()});
  return arr;
}

Mat entries_from_json(const nlohmann::json& arr, int rows, int cols) {
  if (!arr.is_array() || arr.size() != static_cast<size_t>(rows * cols))
    throw ParseError("entries: expected " + std::to_string(rows * cols) +
                     " [re, im] pairs");
  Mat m(rows, cols);
  size_t k = 0;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j, ++k) {
      const auto& e = arr[k];
      if (!e.is_array() || e.size() != 2)
        throw ParseError("entries: element is not a [re, im] pair");
      m(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  return m;
}

// Fixed-precision number formatting so identical runs produce byte-identical
// report files.
std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

nlohmann::json state_to_json(const BipartiteState& state) {
  return {{"d_A", state.dims.dA},
          {"d_B", state.dims.dB},
          {"entries", entries_to_json(state.rho)}};
}

BipartiteState state_from_json(const nlohmann::json& j) {
  if (!j.contains("d_A") || !j.contains("d_B") || !j.contains("entries"))
    throw ParseError("state: missing d_A, d_B, or entries");
  const int dA = j["d_A"].get<int>();
  const int dB = j["d_B"].get<int>();
  if (dA < 1 || dB < 1) throw ParseError("state: dims must be positive");
  const int d = dA * dB;
  return BipartiteState(entries_from_json(j["entries"], d, d), DimPair{dA, dB});
}

nlohmann::json channel_to_json(const Channel& ch) {
  nlohmann::json kraus = nlohmann::json::array();
  for (const Mat& k : ch.kraus) kraus.push_back(entries_to_json(k));
  return {{"d_in", ch.d_in}, {"d_out", ch.d_out}, {"kraus", kraus}};
}

Channel channel_from_json(const nlohmann::json& j) {
  if (!j.contains("d_in") || !j.contains("d_out") || !j.contains("kraus"))
    throw ParseError("channel: missing d_in, d_out, or kraus");
  const int din = j["d_in"].get<int>();
  const int dout = j["d_out"].get<int>();
  if (din < 1 || dout < 1) throw ParseError("channel: dims must be positive");
  std::vector<Mat> kraus;
  for (const auto& k : j["kraus"])
    kraus.push_back(entries_from_json(k, dout, din));
  if (kraus.empty()) throw ParseError("channel: empty kraus list");
  return Channel(std::move(kraus));
}

namespace {

nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return j;
}

}  // namespace

BipartiteState load_state(const std::string& path) {
  return state_from_json(parse_file(path));
}

Channel load_channel(const std::string& path) {
  return channel_from_json(parse_file(path));
}

nlohmann::json report_to_json(const MeasureReport& rep) {
  nlohmann::json j = {
      {"value", rep.value},
      {"arg_desc", rep.arg_desc},
      {"clamped", rep.clamped},
      {"optimizer",
       {{"restarts", rep.optimizer.restarts},
        {"grid_resolution",
         {rep.optimizer.grid_theta, rep.optimizer.grid_phi}},
        {"refinement_iters", rep.optimizer.refine_iters},
        {"converged", rep.optimizer.converged}}}};
  if (rep.argmin_basis.vectors.size() > 0)
    j["argmin_basis"] = entries_to_json(rep.argmin_basis.vectors);
  return j;
}

std::string audit_to_csv(const std::vector<AuditRow>& rows) {
  std::ostringstream os;
  os << "trial,seed,before,after,delta,channel_desc\n";
  for (const AuditRow& r : rows)
    os << r.trial << ',' << r.seed << ',' << fmt(r.before) << ','
       << fmt(r.after) << ',' << fmt(r.delta) << ",\"" << r.channel_desc
       << "\"\n";
  return os.str();
}

nlohmann::json audit_to_json(const std::vector<AuditRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const AuditRow& r : rows)
    arr.push_back({{"trial", r.trial},
                   {"seed", r.seed},
                   {"before", r.before},
                   {"after", r.after},
                   {"delta", r.delta},
                   {"channel_desc", r.channel_desc}});
  return arr;
}

}  // namespace discord
