// Command-line front end: decompositions, block components, Schur-ring
// products and filters, cores, simple characters, special pairs, and the
// two symbolic verification checks.  Every subcommand has a --json mode.
//
// Exit codes: 0 success (and matching verification verdicts), 1 usage or
// parse errors, 2 precondition violations, 3 a verification mismatch.

#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <specht/json_io.hpp>
#include <specht/specht.hpp>

namespace {

using namespace specht;

int run(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of Specht-module decompositions at q = -1"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text")->configurable(false);
    // accept --json after the subcommand as well
    std::function<int()> action;

    auto add_json_flag = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json); };

    auto emit = [&](const json& j, const std::string& text) {
        if (as_json)
            std::cout << j.dump() << "\n";
        else
            std::cout << text << "\n";
    };

    auto check_p2 = [](int p) {
        if (p != 2)
            throw precondition_error("violated: p = 2 (this family is stated in characteristic 2)");
    };
    auto check_l2 = [](int l) {
        if (l != 2)
            throw precondition_error("violated: l = 2 (this family is stated at q = -1)");
    };

    // ---- decompose ------------------------------------------------------
    auto* decompose = app.add_subcommand("decompose", "Specht-module decompositions");
    decompose->require_subcommand(1);
    {
        static int m = 2, l = 2, p = 2, k = 1;
        static long long a = 0, b = 0;

        auto* stair = decompose->add_subcommand("staircase", "Sp(a, m-1, ..., 2, 1^(b-m+2))");
        stair->add_option("--m", m)->required();
        stair->add_option("--a", a)->required();
        stair->add_option("--b", b)->required();
        stair->add_option("--l", l);
        stair->add_option("--p", p);
        add_json_flag(stair);
        stair->callback([&] {
            action = [&]() -> int {
                check_l2(l);
                Decomposition dec = decompose_staircase(m, a, b, p);
                emit(json_of(dec), render_decomposition(dec));
                return 0;
            };
        });

        auto* hook = decompose->add_subcommand("hook", "Sp(a, 1^b), a and b of opposite parity");
        hook->add_option("--a", a)->required();
        hook->add_option("--b", b)->required();
        hook->add_option("--l", l);
        hook->add_option("--p", p);
        add_json_flag(hook);
        hook->callback([&] {
            action = [&]() -> int {
                check_l2(l);
                Decomposition dec = decompose_hook(a, b, p);
                emit(json_of(dec), render_decomposition(dec));
                return 0;
            };
        });

        auto* a31b = decompose->add_subcommand("a31b", "Sp(a, 3, 1^(b-1)) in characteristic 2");
        a31b->add_option("--a", a)->required();
        a31b->add_option("--b", b)->required();
        a31b->add_option("--l", l);
        a31b->add_option("--p", p);
        add_json_flag(a31b);
        a31b->callback([&] {
            action = [&]() -> int {
                check_l2(l);
                check_p2(p);
                Decomposition dec = decompose_a31b(a, b);
                emit(json_of(dec), render_decomposition(dec));
                return 0;
            };
        });

        auto* dual = decompose->add_subcommand("dual-a31b", "Sp(b+1, 2, 2, 1^(a-3)), the conjugate labels");
        dual->add_option("--a", a)->required();
        dual->add_option("--b", b)->required();
        dual->add_option("--l", l);
        dual->add_option("--p", p);
        add_json_flag(dual);
        dual->callback([&] {
            action = [&]() -> int {
                check_l2(l);
                check_p2(p);
                Decomposition dec = decompose_a31b_dual(a, b);
                emit(json_of(dec), render_decomposition(dec));
                return 0;
            };
        });

        auto* ex = decompose->add_subcommand("example63", "Sp(2^k+2, 1^(2^k-1)) in characteristic 2");
        ex->add_option("--k", k)->required();
        ex->add_option("--l", l);
        ex->add_option("--p", p);
        add_json_flag(ex);
        ex->callback([&] {
            action = [&]() -> int {
                check_l2(l);
                check_p2(p);
                Decomposition dec = decompose_two_power_hook(k);
                emit(json_of(dec), render_decomposition(dec));
                return 0;
            };
        });
    }

    // ---- blockcomp ------------------------------------------------------
    {
        static int m = 2, l = 2, p = 2;
        static long long a = 0, b = 0;
        auto* block = app.add_subcommand(
            "blockcomp", "block component of M(a, b, (m-2)(l-1), ..., l-1) at core sigma_m");
        block->add_option("--m", m)->required();
        block->add_option("--a", a)->required();
        block->add_option("--b", b)->required();
        block->add_option("--l", l);
        block->add_option("--p", p);
        add_json_flag(block);
        block->callback([&] {
            action = [&]() -> int {
                Decomposition dec = block_component_labels(m, a, b, SpecialParams(l, p));
                emit(json_of(dec), render_decomposition(dec));
                return 0;
            };
        });
    }

    // ---- schur ----------------------------------------------------------
    {
        static std::string rows_text, cols_text, core_text;
        static int m = 0, l = 2;
        auto* sch = app.add_subcommand("schur", "products and filters in the Schur basis");
        sch->require_subcommand(1);

        auto* prod = sch->add_subcommand("prod", "product of s(rows_i) and s(1^cols_j)");
        prod->add_option("--rows", rows_text);
        prod->add_option("--cols", cols_text);
        add_json_flag(prod);
        prod->callback([&] {
            action = [&]() -> int {
                SchurSum g = product_character(parse_composition(rows_text),
                                               parse_composition(cols_text));
                emit(json_of(g), render_schur_sum(g));
                return 0;
            };
        });

        auto* corefilter = sch->add_subcommand("corefilter", "keep terms whose index has the given l-core");
        corefilter->add_option("--rows", rows_text);
        corefilter->add_option("--cols", cols_text);
        corefilter->add_option("--core", core_text)->required();
        corefilter->add_option("--l", l);
        add_json_flag(corefilter);
        corefilter->callback([&] {
            action = [&]() -> int {
                SchurSum g = product_character(parse_composition(rows_text),
                                               parse_composition(cols_text));
                g = truncate_core(g, parse_partition(core_text), l);
                emit(json_of(g), render_schur_sum(g));
                return 0;
            };
        });

        auto* adaptfilter = sch->add_subcommand("adaptfilter", "keep terms with m-adapted index");
        adaptfilter->add_option("--rows", rows_text);
        adaptfilter->add_option("--cols", cols_text);
        adaptfilter->add_option("--m", m)->required();
        add_json_flag(adaptfilter);
        adaptfilter->callback([&] {
            action = [&]() -> int {
                SchurSum g = product_character(parse_composition(rows_text),
                                               parse_composition(cols_text));
                g = truncate_adapted(g, m);
                emit(json_of(g), render_schur_sum(g));
                return 0;
            };
        });
    }

    // ---- core -----------------------------------------------------------
    {
        static std::string lambda_text;
        static int l = 2;
        auto* core = app.add_subcommand("core", "l-core of a partition");
        core->add_option("--lambda", lambda_text)->required();
        core->add_option("--l", l);
        add_json_flag(core);
        core->callback([&] {
            action = [&]() -> int {
                Partition result = l_core(parse_partition(lambda_text), l);
                emit(json{{"core", json_of(result)}}, render_partition(result));
                return 0;
            };
        });
    }

    // ---- char -----------------------------------------------------------
    {
        static long long r = 0, c = 0, d = 0, a = 0, b = 0;
        static int l = 2, p = 2;
        static std::string lambda_text;
        auto* chr = app.add_subcommand("char", "simple-module weight characters and multiplicities");
        chr->require_subcommand(1);

        auto* sl2 = chr->add_subcommand("sl2", "rank-1 simple character of highest weight r");
        sl2->add_option("--r", r)->required();
        sl2->add_option("--l", l);
        sl2->add_option("--p", p);
        add_json_flag(sl2);
        sl2->callback([&] {
            action = [&]() -> int {
                WeightCharacter chi = sl2_simple_character(r, SpecialParams(l, p));
                emit(json_of(chi), render_weight_character(chi));
                return 0;
            };
        });

        auto* gl2 = chr->add_subcommand("gl2", "dim L(c,d)^(a,b)");
        gl2->add_option("--c", c)->required();
        gl2->add_option("--d", d)->required();
        gl2->add_option("--a", a)->required();
        gl2->add_option("--b", b)->required();
        gl2->add_option("--l", l);
        gl2->add_option("--p", p);
        add_json_flag(gl2);
        gl2->callback([&] {
            action = [&]() -> int {
                int mult = gl2_weight_mult(c, d, a, b, SpecialParams(l, p));
                emit(json{{"mult", mult}}, std::to_string(mult));
                return 0;
            };
        });

        auto* gl3 = chr->add_subcommand("gl3-oracle", "rank-3 simple character (base-table recursion)");
        gl3->add_option("--lambda", lambda_text)->required();
        gl3->add_option("--p", p);
        add_json_flag(gl3);
        gl3->callback([&] {
            action = [&]() -> int {
                WeightCharacter chi = gl3_simple_character(parse_partition(lambda_text), p);
                emit(json_of(chi), render_weight_character(chi));
                return 0;
            };
        });
    }

    // ---- special --------------------------------------------------------
    {
        static long long r = 0, b = 0, s = 0, a = 0, u = 0, v = 0;
        static int l = 2, p = 2;
        auto* special = app.add_subcommand(
            "special", "p-special / (l,p)-special pairs and the two-part enumeration");
        auto* opt_r = special->add_option("--r", r, "p-special: first entry of the pair");
        auto* opt_b = special->add_option("--b", b, "p-special: second entry of the pair");
        auto* opt_s = special->add_option("--s", s, "(l,p)-special: first entry");
        auto* opt_a = special->add_option("--a", a, "(l,p)-special: second entry");
        auto* opt_u = special->add_option("--u", u, "enumeration: u");
        auto* opt_v = special->add_option("--v", v, "enumeration: v");
        special->add_option("--l", l);
        special->add_option("--p", p);
        add_json_flag(special);
        special->callback([&] {
            bool mode_r = opt_r->count() > 0;
            bool mode_s = opt_s->count() > 0;
            bool mode_u = opt_u->count() > 0 || opt_v->count() > 0;
            if (static_cast<int>(mode_r) + static_cast<int>(mode_s) + static_cast<int>(mode_u) != 1)
                throw CLI::ValidationError("special",
                                           "give exactly one of --r/--b, --s/--a, or --u/--v");
            if (mode_r && opt_b->count() == 0)
                throw CLI::ValidationError("special", "--r requires --b");
            if (mode_s && opt_a->count() == 0)
                throw CLI::ValidationError("special", "--s requires --a");
            action = [&, mode_r, mode_s]() -> int {
                if (mode_r) {
                    bool result = is_p_special(r, b, p);
                    emit(json{{"special", result}}, result ? "true" : "false");
                } else if (mode_s) {
                    bool result = is_lp_special(s, a, SpecialParams(l, p));
                    emit(json{{"special", result}}, result ? "true" : "false");
                } else {
                    auto list = enumerate_special_two_part(u, v, p);
                    json arr = json::array();
                    std::string text;
                    for (const auto& mu : list) {
                        arr.push_back(json_of(mu));
                        if (!text.empty())
                            text += " ";
                        text += render_partition(mu);
                    }
                    emit(json{{"partitions", arr}}, list.empty() ? "none" : text);
                }
                return 0;
            };
        });
    }

    // ---- verify ---------------------------------------------------------
    {
        static int m = 2;
        static long long a = 0, b = 0;
        auto* verify = app.add_subcommand("verify", "symbolic verification checks");
        verify->require_subcommand(1);

        auto* cor = verify->add_subcommand(
            "cor5-7", "core truncation of s(a)s(1^b)s(1^(m-2))...s(1) against the predicted case");
        cor->add_option("--m", m)->required();
        cor->add_option("--a", a)->required();
        cor->add_option("--b", b)->required();
        add_json_flag(cor);
        cor->callback([&] {
            action = [&]() -> int {
                CoreIdentityResult res = verify_core_identity(m, a, b);
                std::string text = to_string(res.verdict);
                if (res.verdict == CoreIdentityCase::case1 || res.verdict == CoreIdentityCase::case2)
                    text += ": " + render_schur_sum(res.actual);
                if (res.verdict == CoreIdentityCase::mismatch)
                    text += ": filtered = " + render_schur_sum(res.actual) +
                            ", expected = " + render_schur_sum(res.expected);
                emit(json_of(res, m, a, b), text);
                return res.verdict == CoreIdentityCase::mismatch ? 3 : 0;
            };
        });

        auto* prop = verify->add_subcommand(
            "prop7-2-2", "label route vs weight route for the a31b family");
        prop->add_option("--a", a)->required();
        prop->add_option("--b", b)->required();
        add_json_flag(prop);
        prop->callback([&] {
            action = [&]() -> int {
                ConsistencyResult res = verify_a31b_consistency(a, b);
                std::string text = res.consistent ? "consistent" : "MISMATCH";
                emit(json_of(res, a, b), text);
                return res.consistent ? 0 : 3;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }
    return action ? action() : 1;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const specht::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const specht::validity_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const specht::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const specht::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const specht::unsupported_base_case& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const specht::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
