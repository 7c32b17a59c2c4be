#include <CLI11.hpp>
#include <json.hpp>

#include "ncprob/bell.hpp"
#include "ncprob/clt.hpp"
#include "ncprob/cumulants.hpp"
#include "ncprob/moments.hpp"
#include "ncprob/partitions.hpp"
#include "ncprob/prelie.hpp"
#include "ncprob/shuffle.hpp"
#include "ncprob/wick.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace ncprob;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt_fixed12(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", x);
    return buf;
}

std::string fmt_sig12(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// angles accept decimals and pi-literals: "pi", "2pi/3", "-pi/2", "0.75"
double parse_angle(const std::string &text)
{
    std::string s = text;
    double sign = 1.0;
    std::size_t pos = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-')
            sign = -1.0;
        ++pos;
    }
    std::size_t pi_at = s.find("pi", pos);
    try {
        if (pi_at == std::string::npos) {
            std::size_t used = 0;
            double v = std::stod(s.substr(pos), &used);
            if (pos + used != s.size())
                throw std::invalid_argument("");
            return sign * v;
        }
        double coeff = 1.0;
        if (pi_at > pos)
            coeff = std::stod(s.substr(pos, pi_at - pos));
        double den = 1.0;
        std::size_t rest = pi_at + 2;
        if (rest < s.size()) {
            if (s[rest] != '/')
                throw std::invalid_argument("");
            den = std::stod(s.substr(rest + 1));
        }
        return sign * coeff * kPi / den;
    } catch (const std::exception &) {
        throw std::invalid_argument("bad angle '" + text + "'");
    }
}

std::vector<double> parse_angle_list(const std::string &text, std::size_t count)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_angle(item));
    if (out.size() != count)
        throw std::invalid_argument("expected " + std::to_string(count) +
                                    " comma-separated angles in '" + text + "'");
    return out;
}

json load_json(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception &e) {
        throw std::runtime_error("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

Word word_from_dotted(const std::string &dotted,
                      const std::vector<std::string> &names)
{
    if (dotted.empty() || dotted == "1")
        return Word();
    std::vector<int> letters;
    std::stringstream ss(dotted);
    std::string item;
    while (std::getline(ss, item, '.')) {
        auto it = std::find(names.begin(), names.end(), item);
        if (it == names.end())
            throw std::runtime_error("unknown generator '" + item + "' in word '" +
                                     dotted + "'");
        letters.push_back(static_cast<int>(it - names.begin()));
    }
    return Word(std::move(letters));
}

std::string word_to_dotted(const Word &w, const std::vector<std::string> &names)
{
    if (w.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += '.';
        out += names[static_cast<std::size_t>(w[i])];
    }
    return out;
}

struct MomentFile {
    MomentFunctional phi;
    std::vector<std::string> names;
    std::string kind; // empty for plain moment files
};

MomentFile load_moment_file(const std::string &path)
{
    json j = load_json(path);
    try {
        std::vector<std::string> names =
            j.at("generators").get<std::vector<std::string>>();
        unsigned max_degree = j.at("max_degree").get<unsigned>();
        const char *key = j.contains("moments") ? "moments" : "cumulants";
        std::map<Word, Rat> values;
        for (const auto &[k, v] : j.at(key).items()) {
            Word w = word_from_dotted(k, names);
            if (w.empty())
                continue; // the empty word defaults to 1
            values[w] = rat_from_string(v.get<std::string>());
        }
        MomentFunctional phi(static_cast<unsigned>(names.size()), max_degree,
                             std::move(values));
        phi.generator_names = names;
        std::string kind = j.value("kind", std::string());
        return {std::move(phi), std::move(names), std::move(kind)};
    } catch (const json::exception &e) {
        throw std::runtime_error("malformed moment file '" + path +
                                 "': " + e.what());
    }
}

MomentFile state_from_flags(const std::string &in_path, const std::string &model)
{
    if (!in_path.empty() && !model.empty())
        throw std::runtime_error("give either an input file or a model, not both");
    if (!in_path.empty())
        return load_moment_file(in_path);
    if (!model.empty())
        return {MomentFunctional(moment_model_from_name(model)), {"a"}, ""};
    throw std::runtime_error("a state is required (input file or model)");
}

int run_partitions(const std::string &kind_name, int n, bool count_only)
{
    auto parts = enumerate_partitions(partition_kind_from_name(kind_name), n);
    if (count_only) {
        std::cout << parts.size() << "\n";
        return 0;
    }
    for (const auto &p : parts)
        std::cout << partition_to_string(p) << "\n";
    return 0;
}

int run_cumulants_convert(const std::string &kind_name, const std::string &in,
                          unsigned max_degree, const std::string &out_path)
{
    MomentFile mf = load_moment_file(in);
    CumulantKind kind = cumulant_kind_from_name(kind_name);
    CumulantFunctional c = moments_to_cumulants(kind, mf.phi, max_degree);
    json out;
    out["kind"] = cumulant_kind_name(kind);
    out["generators"] = mf.names;
    out["max_degree"] = max_degree;
    json vals = json::object();
    for (unsigned d = 1; d <= max_degree; ++d)
        for (const auto &w : words_of_length(mf.phi.alphabet_size(), d)) {
            Rat v = c(w);
            if (v != 0)
                vals[word_to_dotted(w, mf.names)] = rat_to_string(v);
        }
    out["moments"] = vals;
    std::string text = out.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f)
            throw std::runtime_error("cannot write '" + out_path + "'");
        f << text;
    }
    return 0;
}

int run_magnus(const std::string &in, unsigned max_degree,
               const std::string &check)
{
    MomentFile mf = load_moment_file(in);
    unsigned alphabet = mf.phi.alphabet_size();

    MomentFunctional phi = mf.phi;
    if (mf.kind == "free") {
        // input already holds free cumulants; rebuild the moments
        std::map<Word, Rat> cvals;
        for (unsigned d = 1; d <= max_degree; ++d)
            for (const auto &w : words_of_length(alphabet, d))
                cvals[w] = mf.phi(w);
        CumulantFunctional r(CumulantKind::free, alphabet, max_degree,
                             std::move(cvals));
        std::map<Word, Rat> mvals;
        for (unsigned d = 1; d <= max_degree; ++d)
            for (const auto &w : words_of_length(alphabet, d))
                mvals[w] = cumulants_to_moments(r, w);
        phi = MomentFunctional(alphabet, max_degree, std::move(mvals));
    } else if (!mf.kind.empty()) {
        throw std::runtime_error("unsupported cumulant kind '" + mf.kind +
                                 "' in '" + in + "' (use free or raw moments)");
    }

    auto r = Infinitesimal::from_cumulants(
        moments_to_cumulants(CumulantKind::free, phi, max_degree));
    auto b = Infinitesimal::from_cumulants(
        moments_to_cumulants(CumulantKind::boolean_, phi, max_degree));
    auto h = Infinitesimal::from_cumulants(
        moments_to_cumulants(CumulantKind::monotone, phi, max_degree));

    bool do_monotone = check == "monotone" || check == "both";
    bool do_boolean = check == "boolean" || check == "both";
    if (!do_monotone && !do_boolean)
        throw std::runtime_error("unknown check '" + check +
                                 "' (monotone, boolean or both)");

    Infinitesimal omega_r = magnus(r, max_degree);
    Infinitesimal omega_b = Rat(-1) * magnus(Rat(-1) * b, max_degree);
    bool all_ok = true;
    for (unsigned d = 1; d <= max_degree; ++d) {
        bool ok_m = true, ok_b = true;
        for (const auto &w : words_of_length(alphabet, d)) {
            if (omega_r(w) != h(w))
                ok_m = false;
            if (omega_b(w) != h(w))
                ok_b = false;
        }
        std::cout << "degree " << d << ":";
        if (do_monotone) {
            std::cout << " h = Omega(r) " << (ok_m ? "ok" : "FAIL");
            all_ok = all_ok && ok_m;
        }
        if (do_boolean) {
            std::cout << " h = -Omega(-b) " << (ok_b ? "ok" : "FAIL");
            all_ok = all_ok && ok_b;
        }
        std::cout << "\n";
    }
    std::cout << (all_ok ? "all checks passed" : "some checks FAILED") << "\n";
    return 0;
}

int run_shuffle_spectrum(const std::string &kind_name, unsigned n)
{
    ShuffleChain chain = build_chain(chain_kind_from_name(kind_name), n);
    std::vector<Rat> eigs = spectrum(chain);
    // group the descending multiset into value/multiplicity lines
    std::size_t i = 0;
    while (i < eigs.size()) {
        std::size_t j = i;
        while (j < eigs.size() && eigs[j] == eigs[i])
            ++j;
        std::cout << rat_to_string(eigs[i]) << " x" << (j - i) << "\n";
        i = j;
    }
    return 0;
}

int run_shuffle_mix(const std::string &kind_name, unsigned n, unsigned steps,
                    const std::string &start, bool decimals)
{
    ShuffleChain chain = build_chain(chain_kind_from_name(kind_name), n);
    const auto &basis = perm_basis(n);
    std::vector<int> letters;
    if (start == "identity") {
        for (unsigned i = 0; i < n; ++i)
            letters.push_back(static_cast<int>(i));
    } else {
        for (char c : start) {
            if (c < 'A' || c >= static_cast<char>('A' + n))
                throw std::runtime_error("bad start deck '" + start + "'");
            letters.push_back(c - 'A');
        }
    }
    Word deck(letters);
    std::vector<Rat> dist(basis.size(), 0);
    auto it = std::find(basis.begin(), basis.end(), deck);
    if (it == basis.end())
        throw std::runtime_error("start deck '" + start +
                                 "' is not a permutation of the first " +
                                 std::to_string(n) + " cards");
    dist[static_cast<std::size_t>(it - basis.begin())] = 1;
    dist = iterate_distribution(chain, std::move(dist), steps);
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (i)
            std::cout << ", ";
        std::cout << rat_to_string(dist[i]);
        if (decimals)
            std::cout << " (" << fmt_sig12(static_cast<double>(dist[i])) << ")";
    }
    std::cout << "\n";
    return 0;
}

GradedCoalgebra coalgebra_from_name(const std::string &name, unsigned alphabet)
{
    // "deconcat" kept as a compatibility alias
    if (name == "unshuffle" || name == "deconcat")
        return unshuffle_coalgebra(alphabet);
    if (name == "binomial")
        return binomial_coalgebra();
    throw std::runtime_error("unknown coalgebra '" + name + "'");
}

int run_clt(const std::string &coalgebra_name, const std::string &in,
            const std::string &model, const std::string &element,
            const std::string &n_list_text, unsigned vanish_degree,
            const std::string &format)
{
    MomentFile mf = state_from_flags(in, model);
    GradedCoalgebra C =
        coalgebra_from_name(coalgebra_name, mf.phi.alphabet_size());
    Word x = word_from_dotted(element, mf.names);
    Rat limit = clt_limit(C, mf.phi, x, vanish_degree);
    if (n_list_text.empty()) {
        std::cout << rat_to_string(limit) << "\n";
        return 0;
    }
    std::vector<Int> ns;
    std::stringstream ss(n_list_text);
    std::string item;
    while (std::getline(ss, item, ','))
        ns.push_back(Int(item));
    auto rows = clt_convergence_table(C, mf.phi, x, ns);
    if (format == "json") {
        json out;
        out["element"] = element;
        out["limit"] = rat_to_string(limit);
        out["rows"] = json::array();
        for (const auto &row : rows)
            out["rows"].push_back({{"n", row.n.str()},
                                   {"scaled", rat_to_string(row.scaled)},
                                   {"deviation", rat_to_string(row.deviation)}});
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "n,scaled,deviation\n";
        for (const auto &row : rows)
            std::cout << row.n.str() << "," << rat_to_string(row.scaled) << ","
                      << rat_to_string(row.deviation) << "\n";
    } else {
        std::cout << "limit " << rat_to_string(limit) << "\n";
        for (const auto &row : rows)
            std::cout << "n=" << row.n.str() << " scaled "
                      << rat_to_string(row.scaled) << " deviation "
                      << rat_to_string(row.deviation) << "\n";
    }
    return 0;
}

int run_wick_classical(const std::string &in, const std::string &model,
                       unsigned n)
{
    MomentFile mf = state_from_flags(in, model);
    if (mf.phi.alphabet_size() != 1)
        throw std::runtime_error("classical Wick needs a single generator");
    std::cout << polynomial_to_string(classical_wick(mf.phi, n)) << "\n";
    return 0;
}

int run_wick_free(const std::string &in, const std::string &model,
                  const std::string &word_text)
{
    MomentFile mf = state_from_flags(in, model);
    Word w = word_from_dotted(word_text, mf.names);
    SentenceState state(mf.phi);
    WickExpansion e = free_wick(state, w);
    // longest words first, the leading term on top
    std::vector<std::pair<Word, Rat>> terms(e.terms.begin(), e.terms.end());
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto &a, const auto &b) {
                         return a.first.size() > b.first.size();
                     });
    for (const auto &[sub, c] : terms)
        std::cout << word_to_dotted(sub, mf.names) << "  " << rat_to_string(c)
                  << "\n";
    return 0;
}

int run_bell_factor(const std::string &angles_text)
{
    auto a = parse_angle_list(angles_text, 4);
    std::cout << fmt_fixed12(bell_factor({a[0], a[1], a[2], a[3]})) << "\n";
    return 0;
}

int run_bell_game(const std::string &angles_text, std::uint64_t trials,
                  std::uint64_t seed, const std::string &format)
{
    auto a = parse_angle_list(angles_text, 4);
    GameRecord rec = simulate_game({a[0], a[1], a[2], a[3]}, trials, seed);
    const char *card[2] = {"R", "N"};
    if (format == "json") {
        json out;
        out["trials"] = rec.trials;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                std::string key = std::string(card[i]) + card[j];
                out["plays"][key] = rec.plays[i][j];
                out["agreements"][key] = rec.agreements[i][j];
            }
        out["empirical_factor"] = fmt_sig12(rec.empirical_factor);
        out["standard_error"] = fmt_sig12(rec.standard_error);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "trials " << rec.trials << "\n";
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            std::cout << card[i] << card[j] << " plays " << rec.plays[i][j]
                      << " agreements " << rec.agreements[i][j] << "\n";
    std::cout << "empirical factor " << fmt_fixed12(rec.empirical_factor)
              << "\n";
    std::cout << "standard error " << fmt_fixed12(rec.standard_error) << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"exact combinatorics of noncommutative probability"};
    app.require_subcommand(1);
    app.fallthrough(); // let --format appear after the subcommand too
    std::string format = "pretty";
    app.add_option("--format", format, "output format: json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));

    int rc = 0;
    auto run = [&rc](auto &&fn) {
        return [&rc, fn]() { rc = fn(); };
    };

    // partitions
    auto *p_parts = app.add_subcommand("partitions", "enumerate set partitions");
    std::string part_kind = "all";
    int part_n = 0;
    bool part_count = false;
    p_parts->add_option("--kind", part_kind,
                        "all, noncrossing, interval, nc_irreducible, pair or "
                        "nc_pair");
    p_parts->add_option("--n", part_n, "size of the ground set")->required();
    p_parts->add_flag("--count", part_count, "print only the count");
    p_parts->callback(
        run([&]() { return run_partitions(part_kind, part_n, part_count); }));

    // cumulants convert
    auto *p_cum = app.add_subcommand("cumulants", "moment-cumulant transforms");
    auto *p_conv = p_cum->add_subcommand("convert", "moments file to cumulants");
    std::string cum_kind = "free", cum_in, cum_out;
    unsigned cum_degree = 0;
    p_conv->add_option("--kind", cum_kind, "classical, free, boolean, monotone");
    p_conv->add_option("--in", cum_in, "moment file")->required();
    p_conv->add_option("--max-degree", cum_degree, "degree bound")->required();
    p_conv->add_option("--out", cum_out, "output path (default stdout)");
    p_conv->callback(run([&]() {
        return run_cumulants_convert(cum_kind, cum_in, cum_degree, cum_out);
    }));

    // magnus
    auto *p_mag =
        app.add_subcommand("magnus", "Magnus links between cumulant kinds");
    std::string mag_in, mag_check = "both";
    unsigned mag_degree = 0;
    p_mag->add_option("--in", mag_in, "moment file, or free cumulant file")
        ->required();
    p_mag->add_option("--max-degree", mag_degree, "degree bound")->required();
    p_mag->add_option("--check", mag_check, "monotone, boolean or both");
    p_mag->callback(
        run([&]() { return run_magnus(mag_in, mag_degree, mag_check); }));

    // shuffle
    auto *p_shuf = app.add_subcommand("shuffle", "card shuffling chains");
    auto *p_spec = p_shuf->add_subcommand("spectrum", "exact chain spectrum");
    std::string spec_kind = "riffle";
    unsigned spec_n = 0;
    p_spec->add_option("--kind", spec_kind, "riffle or top_to_random");
    p_spec->add_option("--n", spec_n, "deck size")->required();
    p_spec->callback(run([&]() { return run_shuffle_spectrum(spec_kind, spec_n); }));

    auto *p_mix = p_shuf->add_subcommand("mix", "iterate the chain exactly");
    std::string mix_kind = "riffle", mix_start = "identity";
    unsigned mix_n = 0, mix_steps = 0;
    bool mix_dec = false;
    p_mix->add_option("--kind", mix_kind, "riffle or top_to_random");
    p_mix->add_option("--n", mix_n, "deck size")->required();
    p_mix->add_option("--steps", mix_steps, "number of shuffles")->required();
    p_mix->add_option("--start", mix_start, "deck like AB, or identity");
    p_mix->add_flag("--decimals", mix_dec, "append decimal renderings");
    p_mix->callback(run([&]() {
        return run_shuffle_mix(mix_kind, mix_n, mix_steps, mix_start, mix_dec);
    }));

    // clt
    auto *p_clt = app.add_subcommand("clt", "central limit scaling");
    std::string clt_coalg = "unshuffle", clt_in, clt_model, clt_elem, clt_ns;
    unsigned clt_vanish = 2;
    p_clt->add_option("--coalgebra", clt_coalg,
                      "unshuffle (alias deconcat) or binomial");
    p_clt->add_option("--state", clt_in, "moment file");
    p_clt->add_option("--model", clt_model,
                      "gaussian, semicircle, bernoulli or arcsine");
    p_clt->add_option("--element", clt_elem, "word like a.a.a.a")->required();
    p_clt->add_option("--n", clt_ns, "comma-separated n values for the table");
    p_clt->add_option("--vanish-degree", clt_vanish, "scaling degree r");
    p_clt->callback(run([&]() {
        return run_clt(clt_coalg, clt_in, clt_model, clt_elem, clt_ns,
                       clt_vanish, format);
    }));

    // wick
    auto *p_wick = app.add_subcommand("wick", "Wick polynomials");
    auto *p_wc = p_wick->add_subcommand("classical", "W(x^n) on one variable");
    std::string wc_in, wc_model;
    unsigned wc_n = 0;
    p_wc->add_option("--in", wc_in, "moment file");
    p_wc->add_option("--model", wc_model, "named moment model");
    p_wc->add_option("--n", wc_n, "degree")->required();
    p_wc->callback(run([&]() { return run_wick_classical(wc_in, wc_model, wc_n); }));

    auto *p_wf = p_wick->add_subcommand("free", "free Wick expansion of a word");
    std::string wf_in, wf_model, wf_word;
    p_wf->add_option("--in", wf_in, "moment file");
    p_wf->add_option("--model", wf_model, "named moment model");
    p_wf->add_option("--word", wf_word, "word like a.b.a")->required();
    p_wf->callback(run([&]() { return run_wick_free(wf_in, wf_model, wf_word); }));

    // bell
    auto *p_bell = app.add_subcommand("bell", "Bell inequalities and the game");
    auto *p_bf = p_bell->add_subcommand("factor", "the Bell factor");
    std::string bf_angles;
    p_bf->add_option("--angles", bf_angles, "t1,t1',t2,t2' with pi-literals")
        ->required();
    p_bf->callback(run([&]() { return run_bell_factor(bf_angles); }));

    auto *p_bg = p_bell->add_subcommand("game", "seeded Monte-Carlo Bell game");
    std::string bg_angles;
    std::uint64_t bg_trials = 0, bg_seed = 0;
    p_bg->add_option("--angles", bg_angles, "t1,t1',t2,t2'")->required();
    p_bg->add_option("--trials", bg_trials, "number of trials")->required();
    p_bg->add_option("--seed", bg_seed, "RNG seed");
    p_bg->callback(run(
        [&]() { return run_bell_game(bg_angles, bg_trials, bg_seed, format); }));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
