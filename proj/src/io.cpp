#include "cslab/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "cslab/error.hpp"

namespace cslab::io {

namespace {

// Yields non-empty lines with '#' comments stripped, tracking line numbers for errors.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::istringstream& fields) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (const auto hash = line.find('#'); hash != std::string::npos) {
                line.erase(hash);
            }
            if (line.find_first_not_of(" \t\r") == std::string::npos) {
                continue;
            }
            fields.clear();
            fields.str(line);
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("line " + std::to_string(line_no_) + ": " + what);
    }

    std::size_t line_no() const noexcept { return line_no_; }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

template <typename... Ts>
void read_fields(LineReader& reader, std::istringstream& fields, const char* expect, Ts&... out) {
    if (!(fields >> ... >> out)) {
        reader.fail(std::string("expected ") + expect);
    }
    std::string extra;
    if (fields >> extra) {
        reader.fail("unexpected trailing token '" + extra + "'");
    }
}

BitString read_bits_line(LineReader& reader, std::istringstream& fields, std::size_t expected_len) {
    std::string token;
    read_fields(reader, fields, "a 0/1 string", token);
    if (token.size() != expected_len) {
        reader.fail("string has length " + std::to_string(token.size()) + ", expected " + std::to_string(expected_len));
    }
    try {
        return BitString::parse(token);
    } catch (const ParseError& e) {
        reader.fail(e.what());
    }
}

template <typename T, typename Reader>
T load(const std::filesystem::path& path, Reader&& read) {
    std::ifstream in(path);
    if (!in) {
        throw FileError("cannot open " + path.string());
    }
    return read(in);
}

}  // namespace

CliqueInstance read_graph(std::istream& in) {
    LineReader reader(in);
    std::istringstream fields;
    if (!reader.next(fields)) {
        throw ParseError("graph file is empty");
    }
    std::size_t n = 0, m = 0, k = 0;
    read_fields(reader, fields, "header 'n m k'", n, m, k);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t e = 0; e < m; ++e) {
        if (!reader.next(fields)) {
            throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(e));
        }
        std::size_t u = 0, v = 0;
        read_fields(reader, fields, "edge 'u v'", u, v);
        if (u == 0 || v == 0 || u > n || v > n) {
            reader.fail("vertex out of range [1, " + std::to_string(n) + "]");
        }
        edges.emplace_back(u - 1, v - 1);
    }
    if (reader.next(fields)) {
        reader.fail("more edge lines than the header's m = " + std::to_string(m));
    }
    try {
        return CliqueInstance(n, k, std::move(edges));
    } catch (const ContractViolation& e) {
        throw ParseError(std::string("invalid graph: ") + e.what());
    }
}

void write_graph(std::ostream& out, const CliqueInstance& g) {
    out << g.vertex_count() << ' ' << g.edges().size() << ' ' << g.k() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << display_index(u) << ' ' << display_index(v) << '\n';
    }
}

SelectionCode read_code(std::istream& in) {
    LineReader reader(in);
    std::istringstream fields;
    if (!reader.next(fields)) {
        throw ParseError("code file is empty");
    }
    SelectionCode code;
    std::size_t n = 0;
    read_fields(reader, fields, "header 'l alpha beta delta n'", code.params.block_len, code.params.alpha_num,
                code.params.beta_num, code.params.delta_num, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!reader.next(fields)) {
            throw ParseError("expected " + std::to_string(n) + " codewords, found " + std::to_string(i));
        }
        code.strings.push_back(read_bits_line(reader, fields, code.params.block_len));
    }
    if (reader.next(fields)) {
        reader.fail("more codewords than the header's n = " + std::to_string(n));
    }
    return code;
}

void write_code(std::ostream& out, const SelectionCode& code) {
    const auto& p = code.params;
    out << p.block_len << ' ' << p.alpha_num << ' ' << p.beta_num << ' ' << p.delta_num << ' ' << code.size() << '\n';
    for (const auto& x : code.strings) {
        out << x.to_string() << '\n';
    }
}

PlainInstance read_instance(std::istream& in) {
    LineReader reader(in);
    std::istringstream fields;
    if (!reader.next(fields)) {
        throw ParseError("instance file is empty");
    }
    PlainInstance inst;
    std::size_t count = 0;
    read_fields(reader, fields, "header 'N L d'", count, inst.length, inst.d);
    inst.constraints.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (!reader.next(fields)) {
            throw ParseError("expected " + std::to_string(count) + " constraints, found " + std::to_string(i));
        }
        inst.constraints.push_back(read_bits_line(reader, fields, inst.length));
    }
    if (reader.next(fields)) {
        reader.fail("more constraints than the header's N = " + std::to_string(count));
    }
    return inst;
}

void write_instance(std::ostream& out, const ClosestStringInstance& inst) {
    out << inst.size() << ' ' << inst.length() << ' ' << inst.d << '\n';
    std::string line;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        line = inst.constraints.at(i).to_string();
        line += '\n';
        out << line;
    }
}

void write_instance(std::ostream& out, const PlainInstance& inst) {
    out << inst.constraints.size() << ' ' << inst.length << ' ' << inst.d << '\n';
    for (const auto& x : inst.constraints) {
        out << x.to_string() << '\n';
    }
}

nlohmann::json instance_manifest(const ClosestStringInstance& inst) {
    const auto& p = inst.params;
    nlohmann::json j;
    j["schema"] = "cslab-instance-manifest";
    j["provenance_scheme"] = provenance_scheme_version;
    j["params"] = {{"block_len", p.block_len},
                   {"alpha", p.alpha_num},
                   {"beta", p.beta_num},
                   {"delta", p.delta_num},
                   {"gamma", p.gamma_num()}};
    j["k"] = inst.layout.k;
    j["n"] = inst.coding.vertex_count();
    j["L"] = inst.length();
    j["d"] = inst.d;
    j["gap_target"] = inst.d + p.delta_num;
    j["mode"] = inst.mode == ReductionMode::full ? "full" : "sampled";
    if (inst.mode == ReductionMode::sampled) {
        j["seed"] = inst.seed;
        j["sel_samples"] = inst.sel_samples;
        j["adj_samples"] = inst.adj_samples;
    }
    j["counts"] = {{"sel", inst.counts.sel},
                   {"adj", inst.counts.adj},
                   {"sel_adversarial", inst.counts.sel_adversarial},
                   {"adj_adversarial", inst.counts.adj_adversarial},
                   {"total", inst.size()}};
    nlohmann::json coding = nlohmann::json::array();
    for (const auto& x : inst.coding.code.strings) {
        coding.push_back(x.to_string());
    }
    j["coding"] = std::move(coding);
    return j;
}

CliqueInstance load_graph(const std::filesystem::path& path) {
    return load<CliqueInstance>(path, [](std::istream& in) { return read_graph(in); });
}

SelectionCode load_code(const std::filesystem::path& path) {
    return load<SelectionCode>(path, [](std::istream& in) { return read_code(in); });
}

PlainInstance load_instance(const std::filesystem::path& path) {
    return load<PlainInstance>(path, [](std::istream& in) { return read_instance(in); });
}

}  // namespace cslab::io
