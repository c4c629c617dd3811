#include "tsg/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>
#include <vector>

namespace tsg {
namespace {

constexpr int kMaxOrder = 64;

struct Cursor {
    const std::string& text;
    int line;             // 1-based, for diagnostics
    std::size_t pos = 0;

    void skip_spaces() {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    }
    bool done() {
        skip_spaces();
        return pos >= text.size();
    }
    int column() {
        skip_spaces();
        return static_cast<int>(pos) + 1;
    }
    std::string token() {
        skip_spaces();
        const std::size_t begin = pos;
        while (pos < text.size() && text[pos] != ' ') ++pos;
        return text.substr(begin, pos - begin);
    }
    std::string rest() {
        skip_spaces();
        return text.substr(pos);
    }
    int integer(const char* what) {
        const int col = column();
        const std::string tok = token();
        int value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            throw SyntaxError(line, col, std::string("expected ") + what + ", got '" + tok + "'");
        return value;
    }
    void expect_end() {
        if (!done())
            throw SyntaxError(line, column(), "unexpected trailing token '" + token() + "'");
    }
};

struct Lines {
    std::vector<std::string> rows;
    std::size_t next = 0;

    explicit Lines(const std::string& text) {
        std::string row;
        std::istringstream in(text);
        while (std::getline(in, row)) {
            if (!row.empty() && row.back() == '\r') row.pop_back();
            rows.push_back(row);
        }
    }

    bool blank(const std::string& s) const {
        return s.find_first_not_of(' ') == std::string::npos;
    }

    // Next non-blank line, or nullopt at end of file.
    std::optional<Cursor> directive() {
        while (next < rows.size() && blank(rows[next])) ++next;
        if (next >= rows.size()) return std::nullopt;
        Cursor c{rows[next], static_cast<int>(next) + 1};
        ++next;
        return c;
    }

    // Next line inside a block; blank lines are malformed here.
    Cursor block_line(const char* what) {
        if (next >= rows.size() || blank(rows[next]))
            throw SyntaxError(static_cast<int>(next) + 1, 1,
                              std::string("expected ") + what);
        Cursor c{rows[next], static_cast<int>(next) + 1};
        ++next;
        return c;
    }
};

// "{}" or a run of element indices; used by topology lines and set lines.
SubSet parse_subset(Cursor& cur, int n, const char* what) {
    cur.skip_spaces();
    if (cur.text.compare(cur.pos, 2, "{}") == 0) {
        cur.pos += 2;
        cur.expect_end();
        return SubSet(n);
    }
    SubSet s(n);
    if (cur.done()) throw SyntaxError(cur.line, cur.column(), std::string("expected ") + what);
    while (!cur.done()) {
        const int e = cur.integer("element index");
        if (e < 0 || e >= n)
            throw RangeError(cur.line, "element " + std::to_string(e) + " outside carrier 0.." +
                                           std::to_string(n - 1));
        s.add(e);
    }
    return s;
}

}  // namespace

const SubSet* Instance::find_set(const std::string& name) const {
    for (const auto& [key, value] : sets)
        if (key == name) return &value;
    return nullptr;
}

const Partition* Instance::find_partition(const std::string& name) const {
    for (const auto& [key, value] : partitions)
        if (key == name) return &value;
    return nullptr;
}

Instance parse_instance(const std::string& text) {
    Lines lines(text);

    auto version = lines.directive();
    if (!version) throw SyntaxError(1, 1, "empty file, expected 'tsg 1'");
    if (version->token() != "tsg") throw SyntaxError(version->line, 1, "expected 'tsg 1' header");
    if (version->integer("format version") != 1)
        throw SyntaxError(version->line, 1, "unsupported format version");
    version->expect_end();

    auto order_line = lines.directive();
    if (!order_line || order_line->token() != "order")
        throw SyntaxError(order_line ? order_line->line : version->line + 1, 1,
                          "expected 'order <n>'");
    const int n = order_line->integer("order");
    if (n < 1 || n > kMaxOrder)
        throw RangeError(order_line->line,
                         "order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxOrder));
    order_line->expect_end();

    auto cube_line = lines.directive();
    if (!cube_line || cube_line->token() != "cube")
        throw SyntaxError(cube_line ? cube_line->line : order_line->line + 1, 1, "expected 'cube'");
    cube_line->expect_end();

    std::vector<Elem> cube(static_cast<std::size_t>(n) * n * n);
    std::vector<int> row_lines(static_cast<std::size_t>(n) * n);
    for (int row = 0; row < n * n; ++row) {
        Cursor cur = lines.block_line("cube row");
        row_lines[row] = cur.line;
        for (int c = 0; c < n; ++c) {
            const int v = cur.integer("cube entry");
            if (v < 0 || v >= n)
                throw RangeError(cur.line, "cube entry " + std::to_string(v) +
                                               " outside carrier 0.." + std::to_string(n - 1));
            cube[static_cast<std::size_t>(row) * n + c] = v;
        }
        cur.expect_end();
    }
    TernaryTable table(n, std::move(cube));
    const AssociativityResult assoc = is_ternary_semigroup(table);
    if (!assoc.ok) {
        const auto [a, b, c, d, e] = assoc.witness;
        throw AxiomError(row_lines[a * n + b],
                         "cube is not associative at (a,b,c,d,e)=(" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + "," + std::to_string(d) +
                             "," + std::to_string(e) + ")");
    }
    table.verify_associativity();

    Instance inst{std::move(table), std::nullopt, {}, {}};
    while (auto dir = lines.directive()) {
        const int col = dir->column();
        const std::string head = dir->token();
        if (head == "topology") {
            if (inst.topology)
                throw SyntaxError(dir->line, col, "duplicate topology block");
            const int m = dir->integer("family size");
            if (m < 1 || m > (1 << 16))
                throw RangeError(dir->line, "family size " + std::to_string(m) + " outside 1.." +
                                                std::to_string(1 << 16));
            dir->expect_end();
            std::vector<SubSet> family;
            family.reserve(m);
            for (int i = 0; i < m; ++i) {
                Cursor cur = lines.block_line("open set");
                family.push_back(parse_subset(cur, n, "open set"));
            }
            try {
                inst.topology.emplace(n, std::move(family));
            } catch (const ArgumentError& err) {
                throw AxiomError(dir->line, err.what());
            }
        } else if (head == "set") {
            const int name_col = dir->column();
            const std::string name = dir->token();
            if (name.empty()) throw SyntaxError(dir->line, name_col, "expected set name");
            if (inst.find_set(name))
                throw SyntaxError(dir->line, name_col, "duplicate set name '" + name + "'");
            inst.sets.emplace_back(name, parse_subset(*dir, n, "set elements"));
        } else if (head == "partition") {
            const int name_col = dir->column();
            const std::string name = dir->token();
            if (name.empty()) throw SyntaxError(dir->line, name_col, "expected partition name");
            if (inst.find_partition(name))
                throw SyntaxError(dir->line, name_col, "duplicate partition name '" + name + "'");
            const int body_col = dir->column();
            try {
                inst.partitions.emplace_back(name, Partition::parse(n, dir->rest()));
            } catch (const ArgumentError& err) {
                throw SyntaxError(dir->line, body_col, err.what());
            }
        } else {
            throw SyntaxError(dir->line, col, "unknown directive '" + head + "'");
        }
    }
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    const int n = inst.table.order();
    std::ostringstream os;
    os << "tsg 1\n";
    os << "order " << n << "\n";
    os << "cube\n";
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) os << (c ? " " : "") << inst.table.at(a, b, c);
            os << "\n";
        }
    if (inst.topology) {
        os << "topology " << inst.topology->opens().size() << "\n";
        for (const SubSet& u : inst.topology->opens()) os << u.to_string() << "\n";
    }
    for (const auto& [name, s] : inst.sets) os << "set " << name << " " << s.to_string() << "\n";
    for (const auto& [name, p] : inst.partitions)
        os << "partition " << name << " " << p.to_string() << "\n";
    return os.str();
}

}  // namespace tsg
