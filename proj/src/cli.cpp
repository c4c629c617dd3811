#include "tsg/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "tsg/congruence.hpp"
#include "tsg/enumerate.hpp"
#include "tsg/errors.hpp"
#include "tsg/instance_io.hpp"
#include "tsg/replay.hpp"
#include "tsg/topstruct.hpp"

namespace tsg {
namespace {

// Environment problems (unreadable file, bad name reference) are usage
// errors, distinct from mathematical check failures.
struct UsageError {
    std::string message;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError{"cannot read " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Mode to_mode(const std::string& name) {
    return name == "relaxed" ? Mode::relaxed : Mode::strict;
}

const char* word(bool b) { return b ? "true" : "false"; }
char bit(bool b) { return b ? '1' : '0'; }

// "0-1,2-3" -> {(0,1),(2,3)}.
std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
    std::vector<std::pair<int, int>> pairs;
    std::istringstream in(text);
    std::string chunk;
    while (std::getline(in, chunk, ',')) {
        const std::size_t dash = chunk.find('-');
        if (dash == std::string::npos || dash == 0 || dash + 1 == chunk.size())
            throw UsageError{"bad pair '" + chunk + "', expected a-b"};
        try {
            pairs.emplace_back(std::stoi(chunk.substr(0, dash)), std::stoi(chunk.substr(dash + 1)));
        } catch (const std::exception&) {
            throw UsageError{"bad pair '" + chunk + "', expected a-b"};
        }
    }
    if (pairs.empty()) throw UsageError{"empty pair list"};
    return pairs;
}

void cmd_validate(std::ostream& os, const std::string& file) {
    const Instance inst = parse_instance(slurp(file));
    os << "ok order " << inst.table.order() << "\n";
    if (inst.topology) os << "topology " << inst.topology->opens().size() << " opens\n";
}

void cmd_info(std::ostream& os, const std::string& file) {
    const Instance inst = parse_instance(slurp(file));
    const TernaryTable& t = inst.table;
    const int n = t.order();
    os << "order " << n << "\n";
    os << "associative true\n";
    os << "ternary group " << word(is_ternary_group(t)) << "\n";
    os << "inverses";
    for (int a = 0; a < n; ++a) {
        const std::optional<Elem> inv = inverse_of(t, a);
        if (inv)
            os << ' ' << *inv;
        else
            os << " -";
    }
    os << "\n";
    if (inst.topology)
        os << "topology opens " << inst.topology->opens().size() << " hausdorff "
           << word(is_hausdorff(*inst.topology)) << "\n";
    for (const auto& [name, s] : inst.sets) os << "set " << name << " " << s.to_string() << "\n";
    for (const auto& [name, p] : inst.partitions)
        os << "partition " << name << " " << p.to_string() << "\n";
}

void cmd_congruences(std::ostream& os, const std::string& file) {
    const Instance inst = parse_instance(slurp(file));
    const std::vector<Partition> congs = enumerate_congruences(inst.table);
    os << "count " << congs.size() << "\n";
    for (const Partition& p : congs) os << p.to_string() << "\n";
}

// The partition comes from a named partition, a named set treated as a Rees
// ideal, or an inline generating-pair list closed up to a congruence.
Partition resolve_congruence(const Instance& inst, const std::string& congruence,
                             const std::string& ideal) {
    if (!ideal.empty()) {
        const SubSet* s = inst.find_set(ideal);
        if (!s) throw UsageError{"unknown set '" + ideal + "'"};
        return rees_congruence(inst.table, *s);
    }
    if (const Partition* p = inst.find_partition(congruence)) return *p;
    if (congruence.find('-') != std::string::npos)
        return congruence_closure(inst.table, parse_pairs(congruence));
    throw UsageError{"unknown partition '" + congruence + "'"};
}

int cmd_quotient(std::ostream& os, const std::string& file, const std::string& congruence,
                 const std::string& ideal, Mode mode) {
    const Instance inst = parse_instance(slurp(file));
    const Partition p = resolve_congruence(inst, congruence, ideal);
    QuotientResult qr = quotient_semigroup(inst.table, p);
    os << "classes " << qr.table.order() << "\n";
    os << "partition " << p.to_string() << "\n";
    os << "map";
    for (int a = 0; a < inst.table.order(); ++a) os << ' ' << qr.natural_map.apply(a);
    os << "\n";
    std::optional<FiniteTopology> qtop;
    if (inst.topology) {
        qtop = quotient_topology(*inst.topology, qr.natural_map);
        if (inst.table.order() <= 8) {
            const TopTernaryStructure x(inst.table, *inst.topology, mode);
            const QuotientTopReport rep = quotient_top_semigroup(x, p);
            os << "hypotheses HMCQ " << bit(x.hausdorff()) << bit(x.multiplication_continuous())
               << bit(rep.rho_closed) << bit(rep.pi3_quotient_map) << "\n";
            os << "conclusions g" << bit(rep.mult_continuous) << " h"
               << bit(rep.quotient_hausdorff) << " d" << bit(rep.diagonal_closed) << "\n";
        }
    }
    os << serialize_instance(Instance{std::move(qr.table), std::move(qtop), {}, {}});
    return 0;
}

int cmd_cosets(std::ostream& os, const std::string& file, const std::string& subgroup,
               Mode mode) {
    const Instance inst = parse_instance(slurp(file));
    const SubSet* h = inst.find_set(subgroup);
    if (!h) throw UsageError{"unknown set '" + subgroup + "'"};
    const NormalityReport nr = is_normal_subgroup(inst.table, *h);
    os << "normal " << word(nr.normal) << "\n";
    os << "cond-a " << (nr.a_fully_evaluated ? word(nr.a_all_hold) : "partial") << " evaluated "
       << nr.a_evaluated << "\n";
    os << "cond-b " << word(nr.cond_b) << "\n";
    os << "cond-c " << word(nr.cond_c) << "\n";
    if (!nr.normal) return 1;
    const FiniteTopology topo =
        inst.topology ? *inst.topology : FiniteTopology::discrete(inst.table.order());
    const TopTernaryStructure x(inst.table, topo, mode);
    const CosetQuotientResult r = coset_quotient_group(x, *h);
    for (const SubSet& coset : r.cosets) os << "coset " << coset.to_string() << "\n";
    const CosetStepReport& s = r.steps;
    os << "steps pi-open " << word(s.pi_open) << " mult " << word(s.mult_continuous)
       << " inversion " << word(s.inversion_continuous) << " relation-closed "
       << word(s.relation_closed) << " hausdorff " << word(s.quotient_hausdorff) << "\n";
    os << serialize_instance(Instance{r.quotient.table(), r.quotient.topology(), {}, {}});
    return 0;
}

void cmd_enumerate(std::ostream& os, int order, bool up_to_iso, bool allow_order_4, int jobs) {
    EnumerateOptions opts;
    opts.up_to_iso = up_to_iso;
    opts.allow_order_4 = allow_order_4;
    opts.jobs = jobs;
    const std::vector<TernaryTable> tables = enumerate_ternary_semigroups(order, opts);
    os << "count " << tables.size() << "\n";
    for (const TernaryTable& t : tables) {
        for (int a = 0; a < order; ++a)
            for (int b = 0; b < order; ++b)
                for (int c = 0; c < order; ++c)
                    os << ((a | b | c) ? " " : "") << t.at(a, b, c);
        os << "\n";
    }
}

int cmd_replay(std::ostream& os, const std::string& suite, int order, Mode mode, int jobs,
               const std::string& out_path) {
    ReplayOptions opts;
    opts.mode = mode;
    opts.max_order = order;
    opts.jobs = jobs;
    const ReplayReport report = replay_suite(suite, opts);
    const std::string text = report.to_text();
    os << text;
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw UsageError{"cannot write " + out_path};
        f << text;
    }
    return report.violations > 0 ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite ternary semigroups: validation, quotients, enumeration, theorem replay"};
    app.name("tsg");
    app.require_subcommand(1);

    std::string file;
    std::string congruence;
    std::string ideal;
    std::string subgroup;
    std::string suite;
    std::string mode_name = "strict";
    std::string out_path;
    int order = 0;
    bool up_to_iso = false;
    bool allow_order_4 = false;
    int jobs = 1;

    const auto add_mode = [&](CLI::App* sub) {
        sub->add_option("--mode", mode_name, "strict or relaxed")
            ->check(CLI::IsMember({"strict", "relaxed"}));
    };
    const auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));
    };

    CLI::App* validate = app.add_subcommand("validate", "parse and check an instance file");
    validate->add_option("file", file, "instance file")->required();

    CLI::App* info = app.add_subcommand("info", "structural summary of an instance");
    info->add_option("file", file, "instance file")->required();

    CLI::App* congruences = app.add_subcommand("congruences", "list every congruence");
    congruences->add_option("file", file, "instance file")->required();

    CLI::App* quotient = app.add_subcommand("quotient", "quotient by a congruence or ideal");
    quotient->add_option("file", file, "instance file")->required();
    CLI::Option* copt = quotient->add_option("--congruence", congruence,
                                             "named partition or pairs like 0-1,2-3");
    CLI::Option* iopt = quotient->add_option("--ideal", ideal, "named set, Rees congruence");
    copt->excludes(iopt);
    add_mode(quotient);

    CLI::App* cosets = app.add_subcommand("cosets", "coset space by a normal ternary subgroup");
    cosets->add_option("file", file, "instance file")->required();
    cosets->add_option("--subgroup", subgroup, "named set")->required();
    add_mode(cosets);

    CLI::App* enumerate = app.add_subcommand("enumerate", "all ternary semigroups of an order");
    enumerate->add_option("--order", order, "carrier order")->required()->check(CLI::Range(1, 4));
    enumerate->add_flag("--up-to-iso", up_to_iso, "keep lex-minimal representatives only");
    enumerate->add_flag("--allow-order-4", allow_order_4, "opt into the slow order-4 search");
    add_jobs(enumerate);

    CLI::App* replay = app.add_subcommand("replay", "run a theorem replay suite");
    replay->add_option("--suite", suite, "wallace, rees, coset or th2-forward")
        ->required()
        ->check(CLI::IsMember({"wallace", "rees", "coset", "th2-forward"}));
    replay->add_option("--order", order, "cap instance orders")->check(CLI::Range(1, 16));
    replay->add_option("--out", out_path, "also write the report to a file");
    add_mode(replay);
    add_jobs(replay);

    std::vector<std::string> full;
    full.reserve(args.size() + 1);
    full.emplace_back("tsg");
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(full.size());
    for (const std::string& s : full) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::ostringstream buffer;
    int code = 0;
    try {
        if (validate->parsed()) {
            cmd_validate(buffer, file);
        } else if (info->parsed()) {
            cmd_info(buffer, file);
        } else if (congruences->parsed()) {
            cmd_congruences(buffer, file);
        } else if (quotient->parsed()) {
            if (congruence.empty() && ideal.empty())
                throw UsageError{"quotient needs --congruence or --ideal"};
            code = cmd_quotient(buffer, file, congruence, ideal, to_mode(mode_name));
        } else if (cosets->parsed()) {
            code = cmd_cosets(buffer, file, subgroup, to_mode(mode_name));
        } else if (enumerate->parsed()) {
            cmd_enumerate(buffer, order, up_to_iso, allow_order_4, jobs);
        } else if (replay->parsed()) {
            code = cmd_replay(buffer, suite, order, to_mode(mode_name), jobs, out_path);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.message << "\n";
        return 2;
    } catch (const AxiomError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    out << buffer.str();
    return code;
}

}  // namespace tsg
