"""Exit criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line (also repeated in the
terminal summary) and then asserts.  Tolerances are fixed here.
"""

import itertools
import random
import statistics
import time
from math import factorial


from conftest import ACCEPTANCE_LINES
from reference import naive_decode
from weylrank.cli import main
from weylrank.codec import decode_d, digits_to_subexceedant, element_to_digits, encode_d, tau
from weylrank.number_system import (
    ConversionStats,
    MixedRadixDigits,
    digits_to_int,
    format_digit_string,
    int_to_digits,
    max_value,
    parse_digit_string,
    radix_profile,
)
from weylrank.oracle import certify
from weylrank.permutation import format_window, negative_count, parse_window
from weylrank.subexceedant import format_f_word, phi_inverse


def record(label, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} {label}: {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def cli(capsys, *argv):
    code = main(list(argv))
    out, _ = capsys.readouterr()
    return code, out.strip()


def median_seconds(fn, repeats=21):
    times = []
    for _ in range(repeats):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return statistics.median(times)


def test_ac1_conversion_example(capsys):
    x, text = 151100130419, "(3:15:6:9:8:5:4:5:7:2:3)"
    profile = radix_profile("D", 12)
    fwd = cli(capsys, "convert", "--family", "D", "--rank", "12", str(x))
    back = cli(capsys, "convert", "--family", "D", "--rank", "12", text)
    t_fwd = median_seconds(lambda: format_digit_string(int_to_digits(x, profile)))
    t_back = median_seconds(lambda: digits_to_int(parse_digit_string(text, "D", 12)))
    ok = fwd == (0, text) and back == (0, str(x)) and t_fwd < 1e-3 and t_back < 1e-3
    record(
        "AC1 convert 151100130419 <-> digits (D12), < 1 ms",
        ok,
        f"forward={fwd[1]} back={back[1]} t_fwd={t_fwd * 1e6:.1f}us t_back={t_back * 1e6:.1f}us",
    )


def test_ac2_full_pipeline_example(capsys):
    window = "[4,3,8,12,-9,-7,-10,-11,1,5,-2,-6]"
    pi = parse_window(window)
    digits = element_to_digits("D", pi)
    f_from_pi = format_f_word(phi_inverse(pi.magnitudes))
    f_from_digits = format_f_word(digits_to_subexceedant(digits))
    code, out = cli(capsys, "encode", "--family", "D", "--digits", window)
    code2, out2 = cli(capsys, "decode", "--family", "D", "--rank", "12", "455941042762")
    ok = (
        encode_d(pi) == 455941042762
        and format_digit_string(digits) == "(11:3:8:0:3:9:9:1:0:2:2)"
        and decode_d(455941042762, 12) == pi
        and f_from_pi == f_from_digits == "1;2;2;1;1;5;5;2;1;5;2;6"
        and (code, out) == (0, "455941042762\n(11:3:8:0:3:9:9:1:0:2:2)")
        and (code2, out2) == (0, window)
    )
    record(
        "AC2 encode/decode 455941042762 <-> window, f-word",
        ok,
        f"rank={encode_d(pi)} digits={format_digit_string(digits)} f={f_from_pi} decode={out2}",
    )


def test_ac3_sign_rule_erratum():
    # The printed window for this rank is [-1,-11,-12,10,-6,7,-3,9,-5,-4,8,-2]:
    # same magnitudes, but its signs read the digit parities most-significant
    # first, which contradicts s_i = (-1)^d_{i-1}.  The sign rules are applied
    # as stated; the expected window comes from the independent reference.
    x = 151100130419
    printed = (-1, -11, -12, 10, -6, 7, -3, 9, -5, -4, 8, -2)
    expected = tuple(naive_decode(x, "D", 12))
    alpha = decode_d(x, 12)
    d = int_to_digits(x, radix_profile("D", 12))
    f_word = format_f_word(digits_to_subexceedant(d))
    ok = (
        alpha.magnitudes.window == (1, 11, 12, 10, 6, 7, 3, 9, 5, 4, 8, 2)
        and alpha.magnitudes.window == tuple(abs(v) for v in printed)
        and f_word == "1;2;2;4;3;3;3;5;5;4;8;2"
        and tau(d) == 7
        and alpha.window == expected == (-1, -11, 12, -10, -6, 7, -3, 9, -5, 4, -8, -2)
        and alpha.window != printed
    )
    record(
        "AC3 decode 151100130419: magnitudes, f-word, tau match; signs per rules",
        ok,
        f"window={format_window(alpha)} f={f_word} tau={tau(d)} (printed signs differ)",
    )


def test_ac4_certify_bijectivity():
    plan = [("D", n) for n in range(2, 7)] + [("A", n) for n in range(2, 8)] + [("B", n) for n in range(1, 6)]
    t = time.perf_counter()
    reports = [certify(family, n) for family, n in plan]
    elapsed = time.perf_counter() - t
    d_sizes = [r.order for r in reports if r.family.value == "D"]
    ok = all(r.passed for r in reports) and d_sizes == [4, 24, 192, 1920, 23040] and elapsed < 30
    summary = " ".join(f"{r.family.value}{r.n}:{r.summary()}" for r in reports)
    record("AC4 certify D2..6, A2..7, B1..5 in < 30 s", ok, f"{elapsed:.2f}s {summary}")


def test_ac5_lemma_suite():
    details = []
    ok = True
    for n in range(2, 6):
        profile = radix_profile("D", n)
        top_place = profile.place_values[-1]
        values = []
        range_ok = sandwich_ok = unique_ok = True
        for digits in itertools.product(*(range(c + 1) for c in profile.digit_caps)):
            d = MixedRadixDigits(profile, digits)
            x = digits_to_int(d)
            range_ok &= 0 <= x <= max_value(profile)
            sandwich_ok &= digits[-1] * top_place <= x < (digits[-1] + 1) * top_place
            unique_ok &= int_to_digits(x, profile) == d
            values.append(x)
        count_ok = len(values) == len(set(values)) == 2 ** (n - 1) * factorial(n)
        ok &= range_ok and sandwich_ok and unique_ok and count_ok
        details.append(f"D{n}:{len(set(values))}")
    record("AC5 range / leading-digit / uniqueness lemmas, D2..5 exhaustive", ok, " ".join(details))


def test_ac6_even_sign_invariant():
    rng = random.Random(20261015)
    order = radix_profile("D", 12).order
    ranks = [rng.randrange(order) for _ in range(10**5)]
    t = time.perf_counter()
    bad = 0
    for x in ranks:
        pi = decode_d(x, 12)
        if negative_count(pi) % 2 or encode_d(pi) != x:
            bad += 1
    elapsed = time.perf_counter() - t
    record(
        "AC6 1e5 random D12 ranks: even negatives and round trip, < 5 s",
        bad == 0 and elapsed < 5,
        f"failures={bad} elapsed={elapsed:.2f}s",
    )


def test_ac7_scaling():
    n = 1000
    rng = random.Random(7)
    x = rng.randrange(2 ** (n - 1) * factorial(n))
    stats = ConversionStats()
    t = time.perf_counter()
    pi = decode_d(x, n, stats)
    t_decode = time.perf_counter() - t
    t = time.perf_counter()
    back = encode_d(pi)
    t_encode = time.perf_counter() - t
    ok = back == x and stats.division_steps == n - 1 and t_decode < 1 and t_encode < 1
    record(
        "AC7 n=1000 encode/decode < 1 s each, division steps = n-1",
        ok,
        f"decode={t_decode * 1e3:.2f}ms encode={t_encode * 1e3:.2f}ms steps={stats.division_steps}",
    )
