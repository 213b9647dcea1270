#include "ybset/solution_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ybset {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

int get_size(const json& doc, const std::string& source) {
    if (!doc.is_object()) throw SchemaError(source + ": document must be a JSON object");
    if (!doc.contains("n") || !doc["n"].is_number_integer())
        throw SchemaError(source + ": missing integer field \"n\"");
    const long long n = doc["n"].get<long long>();
    if (n < 1 || n > 10000) throw SchemaError(source + ": n out of range [1, 10000]");
    return static_cast<int>(n);
}

// Rethrows construction errors with the document's source location prepended,
// preserving the concrete error type (it drives the CLI exit code).
template <typename F>
auto with_source(const std::string& source, F&& f) {
    try {
        return f();
    } catch (const NotBijectiveError& e) {
        throw NotBijectiveError(source + ": " + e.what());
    } catch (const BadIndexError& e) {
        throw BadIndexError(source + ": " + e.what());
    } catch (const BadPermutationError& e) {
        throw BadPermutationError(source + ": " + e.what());
    }
}

std::vector<Permutation> read_perm_list(const json& arr, int n, const std::string& source,
                                        const std::string& key) {
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(n))
        throw SchemaError(source + ": \"" + key + "\" must hold " + std::to_string(n) +
                          " image arrays");
    std::vector<Permutation> perms;
    perms.reserve(n);
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != static_cast<std::size_t>(n))
            throw SchemaError(source + ": \"" + key + "\" entries must be arrays of length " +
                              std::to_string(n));
        std::vector<int> im;
        im.reserve(n);
        for (const auto& v : item) {
            if (!v.is_number_integer())
                throw SchemaError(source + ": \"" + key + "\" entries must be integers");
            im.push_back(v.get<int>());
        }
        perms.emplace_back(std::move(im));  // BadPermutationError propagates
    }
    return perms;
}

}  // namespace

QuadraticSet parse_solution(const std::string& text, const std::string& source) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(source + ": " + e.what());
    }
    const int n = get_size(doc, source);

    int rep_keys = 0;
    for (const char* key : {"r", "sigma_gamma", "sd_sigma"})
        if (doc.contains(key)) ++rep_keys;
    if (rep_keys != 1)
        throw SchemaError(source +
                          ": exactly one of \"r\", \"sigma_gamma\", \"sd_sigma\" is required");

    return with_source(source, [&]() -> QuadraticSet {
        if (doc.contains("r")) {
            const auto& arr = doc["r"];
            if (!arr.is_array() || arr.size() != static_cast<std::size_t>(n) * n)
                throw SchemaError(source + ": \"r\" must hold " + std::to_string(n * n) +
                                  " pairs");
            std::vector<std::pair<int, int>> pairs;
            pairs.reserve(arr.size());
            for (const auto& item : arr) {
                if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
                    !item[1].is_number_integer())
                    throw SchemaError(source + ": \"r\" entries must be integer pairs");
                pairs.emplace_back(item[0].get<int>(), item[1].get<int>());
            }
            return make_from_r_table(n, pairs);
        }
        if (doc.contains("sd_sigma"))
            return make_sd(read_perm_list(doc["sd_sigma"], n, source, "sd_sigma"));
        const auto& sg = doc["sigma_gamma"];
        if (!sg.is_array() || sg.size() != 2)
            throw SchemaError(source + ": \"sigma_gamma\" must be [sigmas, gammas]");
        return make_from_sigma_gamma(read_perm_list(sg[0], n, source, "sigma_gamma"),
                                     read_perm_list(sg[1], n, source, "sigma_gamma"));
    });
}

QuadraticSet load_solution_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_solution(buf.str(), path);
}

std::string serialize_solution(const QuadraticSet& qs) {
    ordered_json doc;
    const int n = qs.size();
    doc["n"] = n;
    auto images = [](const std::vector<Permutation>& perms) {
        ordered_json arr = ordered_json::array();
        for (const Permutation& p : perms) arr.push_back(p.images());
        return arr;
    };
    if (is_sd(qs)) {
        doc["sd_sigma"] = images(qs.sigmas());
    } else if (is_non_degenerate(qs)) {
        doc["sigma_gamma"] = ordered_json::array({images(qs.sigmas()), images(qs.gammas())});
    } else {
        ordered_json arr = ordered_json::array();
        for (auto [u, v] : qs.r_table()) arr.push_back(ordered_json::array({u, v}));
        doc["r"] = arr;
    }
    return doc.dump();
}

}  // namespace ybset
