#include "table.hpp"

#include <algorithm>
#include <optional>

namespace hardsq::cli {

namespace {

constexpr int kRestrictUpTo = 5;

std::string label(const TableEntry& r) {
  return "(" + std::to_string(r.n) + "," + std::to_string(r.p) + "," + std::to_string(r.q) + ")";
}

}  // namespace

BettiTable compute_table(int max_n, const std::vector<Field>& fields, const MorseOptions& options) {
  BettiTable table;
  table.max_n = max_n;
  table.fields = fields;
  for (int n = 2; n <= max_n; ++n) {
    std::optional<MorseComplex> source;
    if (n <= kRestrictUpTo) source = build_morse_complex(n, n, n, options);
    for (int p = 2; p <= n; ++p) {
      for (int q = p; q <= n; ++q) {
        if (p * q < n) continue;
        MorseComplex mc = source ? restrict_morse(*source, p, q) : build_morse_complex(n, p, q, options);
        ChainComplex cc = mc.chain_complex();
        TableEntry row{n, p, q, {}};
        for (const auto& f : fields) row.betti.push_back(betti(cc, f));
        table.rows.push_back(std::move(row));
      }
    }
  }
  return table;
}

std::string table_csv(const BettiTable& table) {
  std::size_t degrees = std::size_t(std::max(table.max_n, 0));
  for (const auto& r : table.rows)
    for (const auto& b : r.betti) degrees = std::max(degrees, b.values.size());
  std::string csv = "n,p,q,field";
  for (std::size_t j = 0; j < degrees; ++j) csv += ",b" + std::to_string(j);
  csv += ",regimes\n";
  for (const auto& r : table.rows) {
    for (std::size_t f = 0; f < table.fields.size(); ++f) {
      const BettiVector& b = r.betti[f];
      csv += std::to_string(r.n) + "," + std::to_string(r.p) + "," + std::to_string(r.q) + "," +
             table.fields[f].name();
      for (std::size_t j = 0; j < degrees; ++j) csv += "," + std::to_string(b.at(j));
      csv += ",";
      auto labels = classify_regime(r.n, r.p, r.q, b);
      for (std::size_t j = 0; j < labels.size(); ++j) csv += (j ? ";" : "") + regime_name(labels[j]);
      csv += "\n";
    }
  }
  return csv;
}

std::vector<std::string> table_disagreements(const BettiTable& table) {
  std::vector<std::string> out;
  for (const auto& r : table.rows)
    for (std::size_t f = 1; f < r.betti.size(); ++f)
      if (r.betti[f].values != r.betti[0].values)
        out.push_back(label(r) + ": Betti numbers over " + table.fields[f].name() + " differ from " +
                      table.fields[0].name());
  return out;
}

}  // namespace hardsq::cli
