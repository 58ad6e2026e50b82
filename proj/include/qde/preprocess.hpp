#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <unordered_map>
#include <vector>

#include "qde/common.hpp"

namespace qde {

struct Vocabulary {
    std::vector<std::string> tokens;  // first-appearance order, unique
};

using CountVector = std::vector<std::uint64_t>;

namespace detail {

// Whitespace split, strip leading/trailing punctuation, lowercase.
inline std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        std::size_t b = 0, e = cur.size();
        while (b < e && std::ispunct(static_cast<unsigned char>(cur[b]))) ++b;
        while (e > b && std::ispunct(static_cast<unsigned char>(cur[e - 1]))) --e;
        if (e > b) {
            std::string tok = cur.substr(b, e - b);
            std::transform(tok.begin(), tok.end(), tok.begin(),
                           [](unsigned char c) { return std::tolower(c); });
            out.push_back(std::move(tok));
        }
        cur.clear();
    };
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)))
            flush();
        else
            cur.push_back(ch);
    }
    flush();
    return out;
}

}  // namespace detail

inline std::pair<Vocabulary, std::vector<CountVector>> bag_of_words(
    const std::vector<std::string>& documents) {
    Vocabulary vocab;
    std::unordered_map<std::string, std::size_t> index;
    std::vector<std::vector<std::string>> tokenized;
    tokenized.reserve(documents.size());
    for (const auto& doc : documents) {
        tokenized.push_back(detail::tokenize(doc));
        for (const auto& tok : tokenized.back()) {
            if (index.emplace(tok, vocab.tokens.size()).second) vocab.tokens.push_back(tok);
        }
    }
    std::vector<CountVector> counts;
    counts.reserve(documents.size());
    for (const auto& toks : tokenized) {
        CountVector cv(vocab.tokens.size(), 0);
        for (const auto& tok : toks) ++cv[index.at(tok)];
        counts.push_back(std::move(cv));
    }
    return {std::move(vocab), std::move(counts)};
}

inline std::vector<std::size_t> ordinal_encode(const std::vector<std::string>& labels,
                                               const std::vector<std::string>& categories) {
    std::vector<std::size_t> out;
    out.reserve(labels.size());
    for (const auto& label : labels) {
        auto it = std::find(categories.begin(), categories.end(), label);
        if (it == categories.end()) throw DomainError("unknown category label '" + label + "'");
        out.push_back(static_cast<std::size_t>(it - categories.begin()));
    }
    return out;
}

inline std::vector<double> one_hot(const std::string& label,
                                   const std::vector<std::string>& categories) {
    auto it = std::find(categories.begin(), categories.end(), label);
    if (it == categories.end()) throw DomainError("unknown category label '" + label + "'");
    std::vector<double> v(categories.size(), 0.0);
    v[static_cast<std::size_t>(it - categories.begin())] = 1.0;
    return v;
}

}  // namespace qde
