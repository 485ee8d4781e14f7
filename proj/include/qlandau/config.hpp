#pragma once

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qlandau {

// `key = value` files, UTF-8, '#' starts a comment. Recognized keys:
// mass_kg, alpha, gamma, beta_soc, temperature_K, vx. All values numeric.
class KeyValueConfig {
public:
    KeyValueConfig() = default;

    static KeyValueConfig from_file(const std::string& path) {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("cannot open config file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return from_string(ss.str(), path);
    }

    static KeyValueConfig from_string(const std::string& text,
                                      const std::string& origin = "<string>") {
        KeyValueConfig cfg;
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                         ": expected `key = value`");
            std::string key = trim(line.substr(0, eq));
            std::string val = trim(line.substr(eq + 1));
            if (!is_known_key(key))
                throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                         ": unknown key `" + key + "`");
            double x;
            try {
                size_t used = 0;
                x = std::stod(val, &used);
                if (used != val.size()) throw std::invalid_argument(val);
            } catch (const std::exception&) {
                throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                         ": value for `" + key +
                                         "` is not a number: `" + val + "`");
            }
            cfg.values_[key] = x;
        }
        return cfg;
    }

    static bool is_known_key(const std::string& key) {
        return key == "mass_kg" || key == "alpha" || key == "gamma" ||
               key == "beta_soc" || key == "temperature_K" || key == "vx";
    }

    std::optional<double> get(const std::string& key) const {
        auto it = values_.find(key);
        if (it == values_.end()) return std::nullopt;
        return it->second;
    }

    void set(const std::string& key, double value) { values_[key] = value; }

    const std::map<std::string, double>& values() const { return values_; }

private:
    static std::string trim(const std::string& s) {
        size_t a = 0, b = s.size();
        while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
        return s.substr(a, b - a);
    }

    std::map<std::string, double> values_;
};

} // namespace qlandau
