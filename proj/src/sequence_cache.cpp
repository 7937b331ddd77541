#include "colsum/sequence_cache.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace colsum {

std::string report_to_json(const SequenceReport& rep, int indent) {
    nlohmann::ordered_json j;
    j["family"] = to_string(rep.family);
    j["params"] = {{"r", rep.r}};
    j["method"] = to_string(rep.method);
    j["quantity"] = rep.quantity;
    auto values = nlohmann::ordered_json::array();
    for (const auto& v : rep.values) values.push_back(to_decimal(v));
    j["values"] = values;
    return j.dump(indent);
}

SequenceReport report_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    SequenceReport rep;
    rep.family = parse_family(j.at("family").get<std::string>());
    rep.r = j.at("params").at("r").get<int>();
    rep.method = parse_method(j.at("method").get<std::string>());
    rep.quantity = j.at("quantity").get<std::string>();
    for (const auto& v : j.at("values")) rep.values.push_back(parse_exact_int(v.get<std::string>()));
    return rep;
}

SequenceCache::SequenceCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path SequenceCache::path_for(Family family, int r, Method method, const std::string& quantity,
                                              int max_n) const {
    std::ostringstream name;
    name << to_string(family) << "_r" << r << "_" << to_string(method) << "_" << quantity << "_N" << max_n << ".json";
    return dir_ / name.str();
}

std::optional<SequenceReport> SequenceCache::load(Family family, int r, Method method, const std::string& quantity,
                                                  int max_n) const {
    std::ifstream in(path_for(family, r, method, quantity, max_n));
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        auto rep = report_from_json(buf.str());
        if (rep.family != family || rep.r != r || rep.method != method || rep.quantity != quantity ||
            rep.max_n() != max_n)
            return std::nullopt;
        return rep;
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable entries are recomputed and overwritten
    }
}

void SequenceCache::store(const SequenceReport& rep) const {
    std::filesystem::create_directories(dir_);
    auto target = path_for(rep.family, rep.r, rep.method, rep.quantity, rep.max_n());
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << report_to_json(rep, 1) << "\n";
    }
    std::filesystem::rename(tmp, target);
}

namespace {

template <class Compute>
SequenceReport through_cache(const SequenceCache* cache, Family family, int r, Method method,
                             const std::string& quantity, int max_n, Compute&& compute) {
    if (cache) {
        if (auto hit = cache->load(family, family_r(family, r), method, quantity, max_n)) return *hit;
    }
    SequenceReport rep = compute();
    if (cache) cache->store(rep);
    return rep;
}

}  // namespace

SequenceReport cached_table_sum(const SequenceCache* cache, Family family, int r, int max_n, Method method) {
    return through_cache(cache, family, r, method, "total", max_n,
                         [&] { return seq_table_sum(family, r, max_n, method); });
}

SequenceReport cached_involutions(const SequenceCache* cache, Family family, int r, int max_n) {
    return through_cache(cache, family, r, Method::direct, "involutions", max_n,
                         [&] { return seq_involutions(family, r, max_n); });
}

SequenceReport cached_g(const SequenceCache* cache, Family family, int max_n) {
    return through_cache(cache, family, 1, Method::direct, "derangement", max_n, [&] { return seq_g(family, max_n); });
}

}  // namespace colsum
