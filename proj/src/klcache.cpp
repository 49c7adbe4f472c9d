#include "dlab/klcache.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "dlab/errors.hpp"

namespace dlab {

void save_kl_cache(const std::string& path, const KLTable& table) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open cache file for writing: " + path);
  out << "KLCACHE v1 " << table.system().descriptor() << '\n';
  for (const auto& [y, b] : table.cached_kl_elements()) {
    std::string yw = y.to_string();
    // map order over x is already deterministic
    for (const auto& [x, h] : b)
      out << yw << '\t' << x.to_string() << '\t' << h.to_string() << '\n';
  }
  if (!out.flush()) throw std::runtime_error("failed writing cache file: " + path);
}

void load_kl_cache(const std::string& path, KLTable& table, bool verify) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cache file: " + path);

  std::string header;
  if (!std::getline(in, header)) throw cache_error("missing header", 0);
  std::istringstream hs(header);
  std::string magic, version, descriptor;
  hs >> magic >> version >> descriptor;
  if (magic != "KLCACHE" || version != "v1" || descriptor.empty())
    throw cache_error("bad header \"" + header + "\"", 0);
  if (descriptor != table.system().descriptor())
    throw std::invalid_argument("cache descriptor \"" + descriptor +
                                "\" does not match group \"" +
                                table.system().descriptor() + "\"");

  const CoxeterSystem& sys = table.system();
  std::map<GroupElement, HeckeElt> loaded;
  std::string line;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos)
      throw cache_error("record needs two tabs", lineno);
    try {
      GroupElement y = parse_element(sys, line.substr(0, t1));
      GroupElement x = parse_element(sys, line.substr(t1 + 1, t2 - t1 - 1));
      LaurentPoly h = LaurentPoly::parse(line.substr(t2 + 1));
      auto& b = loaded.try_emplace(y).first->second;
      if (!b.coeff(x).is_zero()) throw std::invalid_argument("duplicate record");
      b.set(x, std::move(h));
    } catch (const std::invalid_argument& e) {
      throw cache_error(e.what(), lineno);
    }
  }

  for (auto& [y, b] : loaded) {
    if (!b.coeff(y).is_one())
      throw cache_error("reconstructed element for \"" + y.to_string() +
                            "\" has top coefficient != 1",
                        lineno);
    if (verify) {
      for (const auto& [x, h] : b)
        if (!(x == y) && !h.in_v_zv())
          throw cache_error("coefficient of \"" + x.to_string() + "\" in \"" +
                                y.to_string() + "\" lies outside vZ[v]",
                            lineno);
      if (table.bar(b) != b)
        throw cache_error("element for \"" + y.to_string() + "\" is not bar-invariant",
                          lineno);
    }
    table.insert_kl_element(y, std::move(b));
  }
}

}  // namespace dlab
