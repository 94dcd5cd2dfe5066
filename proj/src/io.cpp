#include "maxvec/io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "maxvec/errors.hpp"
#include "maxvec/random.hpp"

namespace maxvec {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

Vec parse_row(const std::vector<std::string>& tokens, std::size_t k, std::size_t line_no,
              bool require_strictly_positive) {
    if (tokens.size() != k) {
        throw DimensionError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(k) + " values, got " +
                             std::to_string(tokens.size()));
    }
    std::vector<Rational> coords;
    coords.reserve(k);
    for (const std::string& tok : tokens) {
        Rational value;
        try {
            value = Rational::from_string(tok);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (require_strictly_positive && !value.is_positive()) {
            throw NonPositiveError("line " + std::to_string(line_no) +
                                   ": value '" + tok + "' must be strictly positive");
        }
        coords.push_back(std::move(value));
    }
    return Vec(std::move(coords));
}

}  // namespace

Instance parse_instance(std::istream& in, bool require_strictly_positive) {
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) {
        throw ParseError("empty input: expected a header line 'n k'");
    }
    ++line_no;
    const std::vector<std::string> header = split_ws(line);
    if (header.size() != 2) {
        throw ParseError("line 1: expected header 'n k'");
    }
    std::size_t n = 0, k = 0;
    try {
        n = std::stoul(header[0]);
        k = std::stoul(header[1]);
    } catch (const std::exception&) {
        throw ParseError("line 1: header values must be integers");
    }
    if (n == 0 || k == 0) {
        throw ParseError("line 1: need at least one agent and one dimension");
    }

    Instance instance;
    instance.k = k;
    instance.bids.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::getline(in, line)) {
            throw ParseError("unexpected end of input: expected " + std::to_string(n) +
                             " bid lines");
        }
        ++line_no;
        instance.bids.push_back(parse_row(split_ws(line), k, line_no, require_strictly_positive));
    }

    // Optional valuation block after a blank line.
    bool saw_blank = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (split_ws(line).empty()) {
            saw_blank = true;
            continue;
        }
        if (!saw_blank) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected a blank line before the valuation block");
        }
        VectorSet valuations;
        valuations.reserve(n);
        valuations.push_back(parse_row(split_ws(line), k, line_no, require_strictly_positive));
        for (std::size_t i = 1; i < n; ++i) {
            if (!std::getline(in, line)) {
                throw ParseError("unexpected end of input: expected " + std::to_string(n) +
                                 " valuation lines");
            }
            ++line_no;
            valuations.push_back(parse_row(split_ws(line), k, line_no, require_strictly_positive));
        }
        instance.valuations = std::move(valuations);
        while (std::getline(in, line)) {
            ++line_no;
            if (!split_ws(line).empty()) {
                throw ParseError("line " + std::to_string(line_no) + ": trailing content");
            }
        }
        break;
    }
    return instance;
}

Instance load_instance(const std::string& path, bool require_strictly_positive) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    return parse_instance(in, require_strictly_positive);
}

std::string format_row(const Vec& v) {
    std::string out;
    for (std::size_t j = 0; j < v.dim(); ++j) {
        if (j != 0) out += ' ';
        out += v[j].to_string();
    }
    return out;
}

std::string format_tuple(const Vec& v) {
    std::string out;
    for (std::size_t j = 0; j < v.dim(); ++j) {
        if (j != 0) out += ',';
        out += v[j].to_string();
    }
    return out;
}

std::string serialize_instance(const Instance& instance) {
    std::string out = std::to_string(instance.bids.size()) + " " +
                      std::to_string(instance.k) + "\n";
    for (const Vec& bid : instance.bids) {
        out += format_row(bid);
        out += '\n';
    }
    if (instance.valuations) {
        out += '\n';
        for (const Vec& v : *instance.valuations) {
            out += format_row(v);
            out += '\n';
        }
    }
    return out;
}

Instance generate_instance(const GenerateConfig& config) {
    if (config.n == 0 || config.k == 0) {
        throw DomainError("need at least one agent and one dimension");
    }
    if (config.max_value < 1) {
        throw DomainError("max_value must be at least 1");
    }
    if (config.enforce_dv && config.max_value < static_cast<std::int64_t>(config.n)) {
        throw DomainError("max_value too small for " + std::to_string(config.n) +
                          " distinct values per dimension");
    }

    std::mt19937_64 rng(config.seed);
    std::vector<std::vector<std::int64_t>> columns(config.k);
    for (std::size_t j = 0; j < config.k; ++j) {
        auto& column = columns[j];
        column.reserve(config.n);
        if (!config.enforce_dv) {
            for (std::size_t i = 0; i < config.n; ++i) {
                column.push_back(uniform_int(rng, 1, config.max_value));
            }
        } else if (config.max_value <= static_cast<std::int64_t>(4 * config.n)) {
            // Dense range: partial Fisher-Yates over the whole range.
            std::vector<std::int64_t> pool(static_cast<std::size_t>(config.max_value));
            std::iota(pool.begin(), pool.end(), std::int64_t{1});
            for (std::size_t i = 0; i < config.n; ++i) {
                const std::size_t pick =
                    i + static_cast<std::size_t>(uniform_below(rng, pool.size() - i));
                std::swap(pool[i], pool[pick]);
                column.push_back(pool[i]);
            }
        } else {
            std::set<std::int64_t> seen;
            while (seen.size() < config.n) {
                seen.insert(uniform_int(rng, 1, config.max_value));
            }
            column.assign(seen.begin(), seen.end());
            // The set iterates in increasing order; shuffle so agents are
            // not sorted per dimension.
            for (std::size_t i = 0; i + 1 < column.size(); ++i) {
                const std::size_t pick =
                    i + static_cast<std::size_t>(uniform_below(rng, column.size() - i));
                std::swap(column[i], column[pick]);
            }
        }
    }

    Instance instance;
    instance.k = config.k;
    instance.bids.reserve(config.n);
    for (std::size_t i = 0; i < config.n; ++i) {
        std::vector<Rational> coords;
        coords.reserve(config.k);
        for (std::size_t j = 0; j < config.k; ++j) {
            coords.push_back(Rational(static_cast<long>(columns[j][i])));
        }
        instance.bids.push_back(Vec(std::move(coords)));
    }
    if (config.with_valuations) {
        instance.valuations = instance.bids;
    }
    return instance;
}

std::string render_outcome_text(const MechanismOutcome& outcome) {
    std::string out;
    for (std::size_t i = 0; i < outcome.agents.size(); ++i) {
        const AgentOutcome& agent = outcome.agents[i];
        out += "agent " + std::to_string(i + 1) + ": ";
        if (agent.removed_as_duplicate) {
            out += "removed (duplicate bid)\n";
        } else if (!agent.winner) {
            out += "loser\n";
        } else {
            out += "winner payment=(" + format_tuple(agent.payment) + ") candidates=" +
                   std::to_string(agent.pay_candidates.size()) + "\n";
        }
    }
    return out;
}

std::string render_outcome_machine(const MechanismOutcome& outcome, bool with_utilities) {
    std::string out;
    for (std::size_t i = 0; i < outcome.agents.size(); ++i) {
        const AgentOutcome& agent = outcome.agents[i];
        out += "agent=" + std::to_string(i + 1);
        out += " removed=" + std::string(agent.removed_as_duplicate ? "1" : "0");
        out += " winner=" + std::string(agent.winner ? "1" : "0");
        out += " payment=" + format_tuple(agent.payment);
        out += " candidates=" + std::to_string(agent.pay_candidates.size());
        if (with_utilities) {
            out += " utility=" + format_tuple(agent.utility);
        }
        out += '\n';
    }
    return out;
}

}  // namespace maxvec
