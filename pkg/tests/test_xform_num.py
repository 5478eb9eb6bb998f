import random
from decimal import Decimal

import pytest

from augforge.errors import UnknownCurrencyError, UnknownUnitError
from augforge.numwords import int_to_words, number_token_to_words, words_to_number
from augforge.rng import derive_rng
from augforge.xform_num import (
    convert_value,
    abbrev_weekday_month,
    change_date_format,
    convert_units,
    load_rates,
    number_to_word,
    parse_dates,
    replace_financial_amounts,
    replace_numerical_values,
)


def rng(tag="t", seed=0):
    return derive_rng(seed, 0, tag)


# --- dates -------------------------------------------------------------------

def test_month_abbrev_target():
    out = change_date_format(
        "The first known case was identified in Wuhan, China in December 2019.", "abbrev"
    )
    assert out == "The first known case was identified in Wuhan, China in Dec 2019."


def test_no_dates_identity():
    text = "No temporal mentions here at all."
    assert change_date_format(text, "iso") == text


def test_iso_target_and_parse_back():
    out = change_date_format("boarded the ship on April 13, 2015 to conduct", "iso")
    assert out == "boarded the ship on 2015-04-13 to conduct"
    assert parse_dates(out) == [(2015, 4, 13)]


def test_every_target_preserves_calendar_date():
    text = "Due April 13, 2015 or 3 May 2021, maybe 2019-12-01."
    assert parse_dates(text) == [(2015, 4, 13), (2021, 5, 3), (2019, 12, 1)]
    for target in ("iso", "long", "abbrev", "day-first", "day-first-abbrev"):
        assert parse_dates(change_date_format(text, target)) == parse_dates(text)
    # slash targets: only day>12 mentions stay recognizable (ambiguous ones
    # are skipped by the recognizer rather than guessed)
    unambiguous = "Due April 13, 2015 and 25 May 2021."
    for target in ("slash-dmy", "slash-mdy"):
        assert parse_dates(change_date_format(unambiguous, target)) == parse_dates(unambiguous)


def test_ambiguous_slashed_dates_skipped():
    text = "meeting on 04/05/2021 ok"
    assert change_date_format(text, "iso") == text  # both fields <= 12: skip
    assert change_date_format("meeting on 25/05/2021 ok", "iso") == "meeting on 2021-05-25 ok"


def test_random_target_with_rng():
    out = change_date_format("born December 1, 2000.", None, rng("dates"))
    assert parse_dates(out) == [(2000, 12, 1)]


def test_invalid_day_not_recognized():
    assert parse_dates("April 39, 2015") == []


# --- weekday / month abbreviation ----------------------------------------------

def test_expand_mon():
    assert abbrev_weekday_month("Mon.", "expand") == "Monday"


def test_plural_untouched():
    assert abbrev_weekday_month("Sundays", "abbreviate") == "Sundays"
    assert abbrev_weekday_month("I rest on Sundays and Mondays", "abbreviate") == (
        "I rest on Sundays and Mondays"
    )


def test_no_names_identity():
    text = "nothing calendrical here"
    assert abbrev_weekday_month(text, "abbreviate") == text
    assert abbrev_weekday_month(text, "expand") == text


def test_abbreviate_then_expand_round_trip():
    text = "Monday and Tuesday in January or December"
    abbreviated = abbrev_weekday_month(text, "abbreviate")
    assert abbreviated == "Mon. and Tue. in Jan. or Dec."
    assert abbrev_weekday_month(abbreviated, "expand") == text


def test_expand_handles_alias_forms():
    assert abbrev_weekday_month("Tues. Sept Thurs.", "expand") == "Tuesday September Thursday"


def test_may_is_never_abbreviated():
    assert abbrev_weekday_month("May", "abbreviate") == "May"


# --- number to words ----------------------------------------------------------

def test_zero():
    assert number_to_word("0") == "zero"


def test_twenty_five_thousand():
    assert number_to_word("25000") == "twenty-five thousand"
    assert number_to_word("25,000") == "twenty-five thousand"


def test_decimal_number():
    assert number_to_word("3.5 km") == "three point five km"


def test_grouped_rendering_with_commas():
    assert int_to_words(1600) == "one thousand, six hundred"
    assert int_to_words(1234567) == (
        "one million, two hundred thirty-four thousand, five hundred sixty-seven"
    )


def test_words_to_number_inverts_generator():
    # oracle: the independent parser recovers every generated value
    cases = list(range(0, 1200)) + [9_999, 25_000, 100_000, 1_000_000, 987_654_321]
    gen = random.Random(5)
    cases += [gen.randrange(0, 10**12) for _ in range(500)]
    for n in cases:
        assert words_to_number(int_to_words(n).replace(",", "").split()) == Decimal(n)


def test_words_to_number_fraction():
    assert words_to_number("three point five".split()) == Decimal("3.5")
    assert words_to_number(["one-hundred"]) == Decimal(100)


def test_words_to_number_rejects_malformed():
    assert words_to_number(["one", "two"]) is None
    assert words_to_number(["hundred"]) is None
    assert words_to_number(["point", "five"]) is None
    assert words_to_number([]) is None


def test_number_token_to_words_decimal():
    assert number_token_to_words("6.90") == "six point nine zero"


# --- replace_numerical_values ----------------------------------------------------

def test_shape_one_one():
    out = replace_numerical_values("6.9", rng("n1"))
    assert len(out) == 3 and out[1] == "." and out[0].isdigit() and out[2].isdigit()


def test_shape_three_digits():
    out = replace_numerical_values("333", rng("n2"))
    assert len(out) == 3 and out.isdigit() and out[0] != "0"


def test_no_numbers_identity():
    assert replace_numerical_values("no numbers", rng()) == "no numbers"


def test_shape_preserved_with_separators():
    gen = random.Random(3)
    for i in range(100):
        digits = "".join(gen.choice("123456789") for _ in range(gen.randrange(1, 10)))
        number = f"{int(digits):,}" if gen.random() < 0.5 else digits
        if gen.random() < 0.5:
            number += "." + "".join(gen.choice("0123456789") for _ in range(gen.randrange(1, 4)))
        out = replace_numerical_values(number, rng(f"sh{i}"))
        assert len(out) == len(number)
        for src, dst in zip(number, out):
            assert src.isdigit() == dst.isdigit()
            if not src.isdigit():
                assert src == dst


# --- unit conversion ------------------------------------------------------------

def test_pounds_to_ounces():
    assert convert_units("100 pounds", target="ounce") == "1600 ounces"


def test_words_format_conserved():
    assert convert_units("one-hundred pounds", target="ounce") == (
        "one thousand, six hundred ounces"
    )


def test_km_to_miles_six_significant_digits():
    # derived: 5 * 0.6213712 miles/km = 3.106856 -> 3.10686 at 6 digits
    assert convert_units("5 km", target="mile") == "3.10686 miles"


def test_unit_value_round_trip_conservation():
    # the conversion arithmetic conserves value to well under 1e-6 relative
    gen = random.Random(9)
    pairs = [("kilometer", "mile"), ("pound", "ounce"), ("meter", "foot"), ("gram", "ounce")]
    for _ in range(200):
        src, dst = gen.choice(pairs)
        value = Decimal(gen.randrange(1, 10**8)) / 100
        recovered = convert_value(convert_value(value, src, dst), dst, src)
        assert abs(recovered - value) / value < Decimal("1e-6")


def test_unit_text_round_trip_within_display_quantum():
    # rendered values carry 6 significant digits, so a text-level round trip
    # is conserved up to one display ulp per direction (1e-5 relative each)
    gen = random.Random(9)
    pairs = [("kilometer", "mile"), ("pound", "ounce"), ("meter", "foot"), ("gram", "ounce")]
    for i in range(60):
        src, dst = gen.choice(pairs)
        value = Decimal(gen.randrange(1, 10**6)) / 100
        converted = convert_units(f"{value} {src}s", target=dst)
        back = convert_units(converted, target=src)
        recovered = Decimal(back.split()[0])
        assert abs(recovered - value) / value < Decimal("2e-5")


def test_unknown_unit():
    with pytest.raises(UnknownUnitError):
        convert_units("5 km", target="parsec")
    with pytest.raises(UnknownUnitError):
        convert_units("5 km", target="pound")  # family mismatch


def test_random_target_same_family():
    out = convert_units("10 miles away", rng=rng("u"))
    unit_word = out.split()[1]
    assert unit_word in {"meters", "kilometers", "centimeters", "millimeters", "yards", "feet", "inches"}


def test_singular_unit_for_one():
    assert convert_units("0.3048 meters", target="foot") == "1 foot"


def test_no_quantities_identity():
    text = "pounds of pressure were applied"  # no numeric value precedes
    assert convert_units(text, target="ounce") == text


# --- money -----------------------------------------------------------------------

def test_euro_to_yen_example():
    out = replace_financial_amounts(
        "I owe Fred € 20 and I need € 10 for the bus.", "JPY"
    )
    assert out == "I owe Fred 2 906.37 Yen and I need 1 453.19 Yen for the bus."


def test_same_rate_throughout_text():
    out = replace_financial_amounts("€ 1 here, € 1 there", "JPY")
    assert out.count("145.32 Yen") == 2


def test_identity_rate_keeps_amounts():
    out = replace_financial_amounts("pay € 20 now", "EUR")
    assert "20.00" in out


def test_money_round_trip():
    text = "I owe Fred € 20 and I need € 10 for the bus."
    to_yen = replace_financial_amounts(text, "JPY")
    back = replace_financial_amounts(to_yen, "EUR")
    amounts = [part for part in back.split("€ ")[1:]]
    assert amounts[0].startswith("20.00") and amounts[1].startswith("10.00")


def test_unknown_currency():
    with pytest.raises(UnknownCurrencyError):
        replace_financial_amounts("€ 5", "XXX")
    with pytest.raises(UnknownCurrencyError):
        replace_financial_amounts("€ 5", "JPY", rates={})


def test_rate_table_fixture_matches_example():
    rates = load_rates()
    assert rates[("EUR", "JPY")] == Decimal("145.3185")
    assert Decimal(20) * rates[("EUR", "JPY")] == Decimal("2906.370")


def test_dollar_formats():
    out = replace_financial_amounts("it costs $1234.5 total", "USD")
    assert out == "it costs $1,234.50 total"
    out = replace_financial_amounts("price: 3000 Yen", "USD")
    assert out.startswith("price: $")
