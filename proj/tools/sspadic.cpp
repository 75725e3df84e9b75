#include "ssp/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <future>
#include <iostream>
#include <thread>

using namespace ssp;

namespace {

Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw Error(ErrorKind::InvalidConfig, "bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

std::pair<Rat, Rat> parse_point(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '(' || c == ')' || c == ' '; }), s.end());
    auto comma = s.find(',');
    if (comma == std::string::npos) throw Error(ErrorKind::InvalidConfig, "point must be x,y");
    return {parse_rat(s.substr(0, comma)), parse_rat(s.substr(comma + 1))};
}

void emit(const Report& r, const std::string& format, bool line) {
    if (format == "text")
        std::cout << to_text(r) << std::flush;
    else
        std::cout << (line ? to_json(r).dump() : to_json(r).dump(2)) << "\n" << std::flush;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic L-functions and Iwasawa invariants of elliptic curves at supersingular primes"};
    RunConfig cfg;
    std::string ainvs, table;
    std::vector<std::string> points;
    int sign = 0, rank_hint = -1, riemann = 0;
    i64 tamagawa = 0;

    app.add_option("--curve", cfg.label, "curve label (built-in table, or the label of --table records)");
    app.add_option("--a-invariants", ainvs, "a1,a2,a3,a4,a6");
    app.add_option("--conductor", cfg.conductor, "conductor, required with --a-invariants");
    app.add_option("--p", cfg.p, "supersingular prime")->required();
    app.add_option("--depth", cfg.depth, "largest level n of the Mazur-Tate family")->capture_default_str();
    app.add_option("--precision", cfg.precision, "p-adic digits (default max(25, depth + 4))");
    app.add_option("--riemann-depth", riemann, "Riemann sums at level 2m for derivatives at the centre");
    app.add_option("--twist", cfg.twist, "fundamental discriminant of the quadratic twist")->capture_default_str();
    app.add_option("--points", points, "rational points x,y on the (twisted) model");
    app.add_option("--tamagawa", tamagawa, "Tamagawa product of the curve studied");
    app.add_option("--sign", sign, "root number (+1 or -1)");
    app.add_option("--rank-hint", rank_hint, "asserted lower bound for the Mordell-Weil rank");
    app.add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--cache", cfg.cache, "JSON cache file for normalized modular symbols");
    app.add_option("--table", table, "curve table: run every record, one JSON object per line");
    CLI11_PARSE(app, argc, argv);

    try {
        if (!ainvs.empty()) {
            std::array<Int, 5> a;
            std::string s = ainvs;
            std::replace(s.begin(), s.end(), ',', ' ');
            std::istringstream in(s);
            for (auto& x : a) {
                std::string tok;
                if (!(in >> tok) || x.set_str(tok, 10) != 0)
                    throw Error(ErrorKind::InvalidConfig, "expected five integer a-invariants");
            }
            cfg.ainvs = a;
        }
        for (const auto& s : points) cfg.points.push_back(parse_point(s));
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
    if (riemann > 0) cfg.riemann_depth = riemann;
    if (tamagawa > 0) cfg.tamagawa = tamagawa;
    if (sign != 0) cfg.sign = sign;
    if (rank_hint >= 0) cfg.rank_hint = rank_hint;

    if (table.empty()) {
        Report r = run(cfg);
        emit(r, cfg.format, false);
        return r.exit_code;
    }

    std::vector<std::string> warnings;
    std::vector<CurveRecord> records;
    try {
        records = ingest_table(table, &warnings);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
    if (!cfg.label.empty())
        records.erase(std::remove_if(records.begin(), records.end(),
                                     [&](const CurveRecord& r) { return r.label != cfg.label; }),
                      records.end());

    auto one = [&](const CurveRecord& rec) {
        RunConfig c = cfg;
        c.label = rec.label;
        c.ainvs = rec.a;
        c.conductor = rec.conductor;
        if (!c.tamagawa && c.twist == 1) c.tamagawa = rec.tamagawa;
        return run(c);
    };
    // one worker per curve, results printed in input order
    size_t workers = std::max(1u, std::thread::hardware_concurrency());
    int worst = 0;
    for (size_t start = 0; start < records.size(); start += workers) {
        std::vector<std::future<Report>> batch;
        for (size_t i = start; i < std::min(records.size(), start + workers); ++i)
            batch.push_back(std::async(std::launch::async, one, std::cref(records[i])));
        for (auto& f : batch) {
            Report r = f.get();
            emit(r, cfg.format, true);
            worst = std::max(worst, r.exit_code);
        }
    }
    return worst;
}
