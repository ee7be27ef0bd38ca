#pragma once

#include <unistd.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mzv/matrices.hpp"

namespace mzv {

using Json = nlohmann::json;

namespace detail {

inline Json entry_json(const FormalCoeff& c) {
    Json a = Json::array();
    for (auto& [s, k] : c.terms()) a.push_back(Json::array({k.get_si(), s.str()}));
    return a;
}
inline Json entry_json(const Rat& r) { return r.str(); }

inline void entry_from(const Json& j, FormalCoeff& out) {
    out = FormalCoeff();
    for (auto& term : j) {
        auto s = SWord::parse(term.at(1).get<std::string>());
        if (!s) throw std::invalid_argument("matrix import: bad coefficient word");
        out.add(*s, Int(term.at(0).get<long>()));
    }
}
inline void entry_from(const Json& j, Rat& out) { out = Rat::parse(j.get<std::string>()); }

}  // namespace detail

template <class Coeff>
Json matrix_to_json(const DerivMatrix<Coeff>& m) {
    Json j;
    j["N"] = m.N;
    j["level"] = m.level;
    j["formal"] = std::is_same_v<Coeff, FormalCoeff>;
    j["rows"] = Json::array();
    for (auto& w : m.rows) j["rows"].push_back(w.digits());
    j["cols"] = Json::array();
    for (auto& w : m.cols) j["cols"].push_back(w.digits());
    Json rows = Json::array();
    for (auto& row : m.entries) {
        Json r = Json::array();
        for (auto& e : row) r.push_back(detail::entry_json(e));
        rows.push_back(std::move(r));
    }
    j["entries"] = std::move(rows);
    return j;
}

template <class Coeff>
DerivMatrix<Coeff> matrix_from_json(const Json& j) {
    constexpr bool formal = std::is_same_v<Coeff, FormalCoeff>;
    if (j.at("formal").get<bool>() != formal)
        throw std::invalid_argument("matrix import: formal flag mismatch");
    DerivMatrix<Coeff> m;
    m.N = j.at("N").get<int>();
    m.level = j.at("level").get<int>();
    for (auto& w : j.at("rows")) m.rows.push_back(Word23(w.get<std::string>()));
    for (auto& w : j.at("cols")) m.cols.push_back(Word23(w.get<std::string>()));
    for (auto& row : j.at("entries")) {
        std::vector<Coeff> r(row.size());
        for (size_t k = 0; k < row.size(); ++k) detail::entry_from(row[k], r[k]);
        m.entries.push_back(std::move(r));
    }
    return m;
}

namespace detail {
inline std::string csv_cell(const FormalCoeff& c) {
    if (c.is_zero()) return "";
    std::string s = c.str();
    return "\"" + s + "\"";
}
inline std::string csv_cell(const Rat& r) { return r.str(); }

inline std::string latex_cell(const FormalCoeff& c) {
    if (c.is_zero()) return "";
    std::string out = "$";
    bool first = true;
    for (auto& [s, k] : c.terms()) {
        Int a = k > 0 ? k : Int(-k);
        if (first) {
            if (k < 0) out += "-";
            first = false;
        } else {
            out += k < 0 ? " - " : " + ";
        }
        if (a != 1) out += a.get_str() + "\\,";
        out += "C_{" + s.str() + "}";
    }
    return out + "$";
}
inline std::string latex_cell(const Rat& r) { return "$" + r.str() + "$"; }
}  // namespace detail

template <class Coeff>
std::string matrix_to_csv(const DerivMatrix<Coeff>& m) {
    std::ostringstream os;
    os << "";
    for (auto& c : m.cols) os << "," << c.display();
    os << "\n";
    for (size_t i = 0; i < m.rows.size(); ++i) {
        os << m.rows[i].display();
        for (size_t j = 0; j < m.cols.size(); ++j) os << "," << detail::csv_cell(m.entries[i][j]);
        os << "\n";
    }
    return os.str();
}

template <class Coeff>
std::string matrix_to_latex(const DerivMatrix<Coeff>& m) {
    std::ostringstream os;
    os << "\\begin{tabular}{|c|";
    for (size_t j = 0; j < m.cols.size(); ++j) os << "c|";
    os << "}\n\\hline\n";
    for (auto& c : m.cols) os << " & " << c.display();
    os << " \\\\\n\\hline\n";
    for (size_t i = 0; i < m.rows.size(); ++i) {
        os << m.rows[i].display();
        for (size_t j = 0; j < m.cols.size(); ++j)
            os << " & " << detail::latex_cell(m.entries[i][j]);
        os << " \\\\\n";
    }
    os << "\\hline\n\\end{tabular}\n";
    return os.str();
}

inline std::string fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// On-disk matrix cache. One file per key, validated by content digest;
/// schema or digest mismatch falls back to recomputation. Writes go through
/// a temporary file and an atomic rename.
class MatrixCache {
public:
    static constexpr int schema_version = 1;

    explicit MatrixCache(std::optional<std::string> dir = std::nullopt) {
        if (dir) {
            dir_ = *dir;
        } else if (const char* env = std::getenv("MZV_CACHE_DIR")) {
            dir_ = env;
        } else {
            dir_ = ".mzv-cache";
        }
    }

    const std::string& dir() const { return dir_; }

    std::string path_for(int N, int level, bool formal) const {
        return dir_ + "/m_" + std::to_string(N) + "_" + std::to_string(level) + "_" +
               (formal ? "f" : "n") + ".v" + std::to_string(schema_version);
    }

    template <class Coeff>
    std::optional<DerivMatrix<Coeff>> load(int N, int level) const {
        constexpr bool formal = std::is_same_v<Coeff, FormalCoeff>;
        std::ifstream in(path_for(N, level, formal));
        if (!in) return std::nullopt;
        Json j;
        try {
            in >> j;
            if (j.at("schema").get<int>() != schema_version) return std::nullopt;
            auto& key = j.at("key");
            if (key.at("N").get<int>() != N || key.at("level").get<int>() != level ||
                key.at("formal").get<bool>() != formal)
                return std::nullopt;
            std::string payload = j.at("payload").dump();
            if (fnv1a64(payload) != j.at("digest").get<std::string>()) return std::nullopt;
            return matrix_from_json<Coeff>(j.at("payload"));
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

    template <class Coeff>
    void store(const DerivMatrix<Coeff>& m) const {
        constexpr bool formal = std::is_same_v<Coeff, FormalCoeff>;
        std::filesystem::create_directories(dir_);
        Json payload = matrix_to_json(m);
        Json j;
        j["schema"] = schema_version;
        j["key"] = {{"N", m.N}, {"level", m.level}, {"formal", formal}};
        j["digest"] = fnv1a64(payload.dump());
        j["payload"] = std::move(payload);

        std::string path = path_for(m.N, m.level, formal);
        std::string tmp = path + ".tmp." + std::to_string(::getpid());
        {
            std::ofstream out(tmp);
            out << j.dump();
        }
        std::filesystem::rename(tmp, path);
    }

    template <class Coeff>
    DerivMatrix<Coeff> get_or_build(int N, int level) {
        if (auto m = load<Coeff>(N, level)) return *m;
        DerivMatrix<Coeff> m;
        if constexpr (std::is_same_v<Coeff, FormalCoeff>)
            m = build_matrix_formal(N, level);
        else
            m = build_matrix_numeric(N, level);
        store(m);
        return m;
    }

private:
    std::string dir_;
};

}  // namespace mzv
