"""Bundled transformations and filters: datacards plus the wiring from entry
ids to their implementations.

Tags are authored fixtures, not inferred; adjust per deployment if your
reading of an operation differs.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

from . import filters as flt
from . import xform_char as xc
from . import xform_lex as xl
from . import xform_num as xn
from .registry import EntryKind, Registry, RegistryEntry
from .rng import Rng
from .tags import (
    AlgorithmType,
    Complexity,
    GeneralTags,
    GpuRequired,
    Implementation,
    InputProcessing,
    LinguisticLevel,
    Meaning,
    OutputRatio,
    OutputTags,
    Preservation,
    PrecisionRecall,
    ProcessingTags,
    Purpose,
    SetType,
    Similarity,
    TagSet,
    TaskType,
    na_output_tags,
)
from .types import Example

_CLASSIFICATION_TASKS = frozenset(
    {TaskType.TEXT_CLASSIFICATION, TaskType.SENTIMENT_ANALYSIS, TaskType.TEXT_TO_TEXT}
)
_QA_TASKS = frozenset({TaskType.QUESTION_ANSWERING, TaskType.QUESTION_GENERATION})


def _general(
    set_type: SetType,
    purpose: Purpose,
    levels,
    tasks=_CLASSIFICATION_TASKS,
    langs=("en",),
) -> GeneralTags:
    return GeneralTags(
        augmented_set_type=set_type,
        purpose=frozenset({purpose}),
        task_types=frozenset(tasks),
        languages=frozenset(langs),
        linguistic_levels=frozenset(levels),
    )


def _output(
    meaning: Meaning,
    gram: Preservation,
    read: Preservation,
    nat: Preservation,
    similarity=(Similarity.VISUAL,),
) -> OutputTags:
    return OutputTags(
        output_input_ratio=OutputRatio.EQ1,
        io_similarity=frozenset(similarity),
        meaning=meaning,
        grammaticality=gram,
        readability=read,
        naturalness=nat,
    )


def _processing(
    processing=(InputProcessing.SUBSTITUTION,),
    algorithm=AlgorithmType.OTHER,
    pr=PrecisionRecall.HPHR,
) -> ProcessingTags:
    return ProcessingTags(
        input_processing=frozenset(processing),
        implementation=Implementation.RULE_BASED,
        algorithm_type=frozenset({algorithm}),
        precision_recall=pr,
        gpu_required=GpuRequired.NO,
        complexity=Complexity.LOW,
    )


_PRESERVING_NOISE = _output(
    Meaning.ALWAYS_PRESERVED,
    Preservation.POSSIBLY_IMPAIRED,
    Preservation.POSSIBLY_IMPAIRED,
    Preservation.POSSIBLY_IMPAIRED,
)
_TYPO_NOISE = _output(
    Meaning.POSSIBLY_CHANGED,
    Preservation.POSSIBLY_IMPAIRED,
    Preservation.POSSIBLY_IMPAIRED,
    Preservation.POSSIBLY_IMPAIRED,
)
_CIPHER_OUTPUT = _output(
    Meaning.ALWAYS_PRESERVED,
    Preservation.ALWAYS_IMPAIRED,
    Preservation.ALWAYS_IMPAIRED,
    Preservation.ALWAYS_IMPAIRED,
)
_CLEAN_REWRITE = _output(
    Meaning.ALWAYS_PRESERVED,
    Preservation.ALWAYS_PRESERVED,
    Preservation.ALWAYS_PRESERVED,
    Preservation.ALWAYS_PRESERVED,
    similarity=(Similarity.MEANING,),
)

_CHAR = (LinguisticLevel.CHARACTER,)
_LEX = (LinguisticLevel.LEXICAL,)

_TRANSFORMATIONS: list[RegistryEntry] = []
_FILTERS: list[RegistryEntry] = []
_TRANSFORM_FNS: dict[str, Callable] = {}
_FILTER_FNS: dict[str, Callable] = {}
_CORPUS_FILTERS: set[str] = set()


def _transformation(
    entry_id: str,
    description: str,
    fn: Callable[[str, Rng, dict], str],
    *,
    purpose: Purpose = Purpose.ROBUSTNESS,
    levels=_CHAR,
    tasks=_CLASSIFICATION_TASKS,
    langs=("en",),
    output: OutputTags = _PRESERVING_NOISE,
    processing=(InputProcessing.SUBSTITUTION,),
    algorithm: AlgorithmType = AlgorithmType.OTHER,
    pr: PrecisionRecall = PrecisionRecall.HPHR,
    params: dict | None = None,
    data_files: tuple[str, ...] = (),
    notes: tuple[tuple[str, str], ...] = (),
) -> None:
    entry = RegistryEntry(
        id=entry_id,
        kind=EntryKind.TRANSFORMATION,
        tags=TagSet(
            general=_general(SetType.TRANSFORMATION, purpose, levels, tasks, langs),
            output=output,
            processing=_processing(processing, algorithm, pr),
            notes=notes,
        ),
        description=description,
        default_params=params or {},
        data_files=data_files,
    )
    _TRANSFORMATIONS.append(entry)
    _TRANSFORM_FNS[entry_id] = fn


def _filter(
    entry_id: str,
    description: str,
    fn: Callable[[Example, dict], flt.FilterVerdict],
    *,
    purpose: Purpose = Purpose.OTHER,
    levels=_LEX,
    tasks=_CLASSIFICATION_TASKS,
    langs=("en",),
    processing=(InputProcessing.TOKENISATION,),
    algorithm: AlgorithmType = AlgorithmType.OTHER,
    pr: PrecisionRecall = PrecisionRecall.HPHR,
    params: dict | None = None,
    data_files: tuple[str, ...] = (),
    notes: tuple[tuple[str, str], ...] = (),
    corpus_level: bool = False,
) -> None:
    base_notes = (("purpose", "subpopulation slicing"),) if purpose is Purpose.OTHER else ()
    entry = RegistryEntry(
        id=entry_id,
        kind=EntryKind.FILTER,
        tags=TagSet(
            general=_general(SetType.FILTER, purpose, levels, tasks, langs),
            output=na_output_tags(),
            processing=_processing(processing, algorithm, pr),
            notes=notes or base_notes,
        ),
        description=description,
        default_params=params or {},
        data_files=data_files,
    )
    _FILTERS.append(entry)
    _FILTER_FNS[entry_id] = fn
    if corpus_level:
        _CORPUS_FILTERS.add(entry_id)


def _lexicon_sub(lexicon_param: str):
    def fn(text: str, rng: Rng, params: dict) -> str:
        lexicon = xl.load_lexicon(params[lexicon_param])
        return xl.lexicon_substitute(text, lexicon, params["p"], rng)

    return fn


def _cmp(params: dict) -> flt.Comparison:
    return flt.Comparison(op=flt.CmpOp(params["op"]), threshold=params["threshold"])


# --- character-level transformations -----------------------------------------

_transformation(
    "butter_fingers",
    "Keyboard-typo noise: letters replaced by physically adjacent keys.",
    lambda text, rng, p: xc.butter_fingers(text, p["p"], xc.load_keyboard(p["layout"]), rng),
    output=_TYPO_NOISE,
    langs=("en", "fr", "de", "es"),
    params={"p": 0.1, "layout": "qwerty"},
    data_files=("keyboards/qwerty.tsv", "keyboards/azerty.tsv"),
    notes=(("casing", "uppercase letters receive uppercased replacement keys"),),
)
_transformation(
    "change_char_case",
    "Randomly swaps the casing of letters.",
    lambda text, rng, p: xc.change_char_case(text, p["p"], rng),
    params={"p": 0.1},
)
_transformation(
    "random_upper",
    "Randomly upper-cases letters.",
    lambda text, rng, p: xc.random_upper(text, p["p"], rng),
    params={"p": 0.1},
)
_transformation(
    "swap_characters",
    "Randomly swaps adjacent characters within words.",
    lambda text, rng, p: xc.swap_adjacent_chars(text, p["p"], rng),
    output=_TYPO_NOISE,
    params={"p": 0.05},
)
_transformation(
    "whitespace_perturbation",
    "Randomly removes or adds whitespace.",
    lambda text, rng, p: xc.whitespace_perturb(text, p["p_add"], p["p_remove"], rng),
    params={"p_add": 0.05, "p_remove": 0.05},
)
_transformation(
    "underscore_trick",
    "Replaces random spaces with underscores.",
    lambda text, rng, p: xc.underscore_trick(text, p["p"], rng),
    params={"p": 0.25},
)
_transformation(
    "leet_letters",
    "Replaces letters with visually similar leet-speak counterparts.",
    lambda text, rng, p: xc.char_substitute(text, xc.load_charmap("leet"), p["p"], rng),
    params={"p": 0.25},
    data_files=("charmaps/leet.tsv",),
)
_transformation(
    "visual_attack_letters",
    "Replaces letters with visually similar, but different, letters.",
    lambda text, rng, p: xc.char_substitute(text, xc.load_charmap("visual_attack"), p["p"], rng),
    params={"p": 0.2},
    data_files=("charmaps/visual_attack.tsv",),
    notes=(("table", "curated static neighbor table, not image-embedding derived"),),
)
_transformation(
    "azerty_qwerty_chars_swap",
    "Swaps the letters that trade places between AZERTY and QWERTY layouts.",
    lambda text, rng, p: xc.char_substitute(text, xc.load_charmap("azerty_qwerty"), p["p"], rng),
    langs=("en", "fr"),
    params={"p": 1.0},
    data_files=("charmaps/azerty_qwerty.tsv",),
)
_transformation(
    "simple_ciphers",
    "Humanly decipherable rewritings: doubled characters/words, spaced "
    "characters, reversals, homoglyphs, rot13.",
    lambda text, rng, p: xc.simple_cipher(text, p["mode"]),
    output=_CIPHER_OUTPUT,
    params={"mode": "rot13"},
    data_files=("charmaps/homoglyph.tsv",),
)
_transformation(
    "pig_latin",
    "Deterministic pig-latin rewriting of English words.",
    lambda text, rng, p: xc.pig_latin(text),
    output=_CIPHER_OUTPUT,
    levels=(LinguisticLevel.CHARACTER, LinguisticLevel.MORPHOLOGICAL),
)
_transformation(
    "diacritic_removal",
    "Strips diacritics, replacing accented characters with plain versions.",
    lambda text, rng, p: xc.diacritic_strip(text),
    purpose=Purpose.AUGMENTATION,
    langs=("en", "fr", "es", "de"),
    output=_output(
        Meaning.ALWAYS_PRESERVED,
        Preservation.POSSIBLY_IMPAIRED,
        Preservation.ALWAYS_PRESERVED,
        Preservation.POSSIBLY_IMPAIRED,
    ),
)

# --- lexicon-driven transformations -------------------------------------------

_transformation(
    "contraction_expansions",
    "Expands contractions (or contracts expansions) from a fixed list.",
    lambda text, rng, p: xl.lexicon_substitute(
        text,
        xl.load_lexicon(
            "contractions_expand" if p["direction"] == "expand" else "contractions_contract"
        ),
        p["p"],
        rng,
    ),
    purpose=Purpose.AUGMENTATION,
    levels=_LEX,
    output=_CLEAN_REWRITE,
    algorithm=AlgorithmType.EXTERNAL_KNOWLEDGE_BASED,
    pr=PrecisionRecall.HPLR,
    params={"direction": "expand", "p": 1.0},
    data_files=("lexicons/contractions_expand.tsv", "lexicons/contractions_contract.tsv"),
)
_transformation(
    "americanize_britishize_english",
    "Converts British spellings to American ones and vice versa.",
    lambda text, rng, p: xl.lexicon_substitute(
        text,
        xl.load_lexicon(
            "british_to_american" if p["direction"] == "to-american" else "american_to_british"
        ),
        p["p"],
        rng,
    ),
    purpose=Purpose.AUGMENTATION,
    levels=_LEX,
    output=_CLEAN_REWRITE,
    algorithm=AlgorithmType.EXTERNAL_KNOWLEDGE_BASED,
    pr=PrecisionRecall.HPLR,
    params={"direction": "to-american", "p": 1.0},
    data_files=("lexicons/british_to_american.tsv", "lexicons/american_to_british.tsv"),
)
_transformation(
    "correct_common_misspellings",
    "Lightweight spell-repair from a list of common misspellings.",
    lambda text, rng, p: xl.correct_misspellings(text),
    purpose=Purpose.AUGMENTATION,
    levels=_LEX,
    output=_output(
        Meaning.ALWAYS_PRESERVED,
        Preservation.POSSIBLY_IMPROVED,
        Preservation.POSSIBLY_IMPROVED,
        Preservation.POSSIBLY_IMPROVED,
        similarity=(Similarity.MEANING,),
    ),
    algorithm=AlgorithmType.EXTERNAL_KNOWLEDGE_BASED,
    pr=PrecisionRecall.HPLR,
    data_files=("lexicons/misspelling_corrections.tsv",),
)
_transformation(
    "replace_spelling",
    "Injects common misspellings with a given probability.",
    _lexicon_sub("lexicon"),
    levels=_LEX,
    output=_TYPO_NOISE,
    algorithm=AlgorithmType.EXTERNAL_KNOWLEDGE_BASED,
    pr=PrecisionRecall.HPLR,
    params={"lexicon": "misspelling_inject", "p": 0.2},
    data_files=("lexicons/misspelling_inject.tsv",),
)
_transformation(
    "token_replacement",
    "Replaces tokens with perturbed versions from a lookup table of OCR "
    "errors and typos.",
    _lexicon_sub("lexicon"),
    levels=_LEX,
    output=_TYPO_NOISE,
    algorithm=AlgorithmType.EXTERNAL_KNOWLEDGE_BASED,
    pr=PrecisionRecall.HPLR,
    params={"lexicon": "ocr_typos", "p": 0.2},
    data_files=("lexicons/ocr_typos.tsv",),
)
_transformation(
    "close_homophones_swap",
    "Swaps words with similar-sounding homophones.",
    _lexicon_sub("lexicon"),
    levels=_LEX,
    output=_output(
        Meaning.POSSIBLY_CHANGED,
        Preservation.POSSIBLY_IMPAIRED,
        Preservation.POSSIBLY_IMPAIRED,
        Preservation.POSSIBLY_IMPAIRED,
        similarity=(Similarity.AURAL,),
    ),
    algorithm=AlgorithmType.EXTERNAL_KNOWLEDGE_BASED,
    pr=PrecisionRecall.HPLR,
    params={"lexicon": "homophones", "p": 0.2},
    data_files=("lexicons/homophones.tsv",),
)
_transformation(
    "abbreviation_transformation",
    "Replaces words and phrases with slang abbreviations.",
    _lexicon_sub("lexicon"),
    purpose=Purpose.AUGMENTATION,
    levels=_LEX,
    output=_output(
        Meaning.POSSIBLY_CHANGED,
        Preservation.POSSIBLY_IMPAIRED,
        Preservation.POSSIBLY_IMPAIRED,
        Preservation.ALWAYS_PRESERVED,
        similarity=(Similarity.MEANING,),
    ),
    algorithm=AlgorithmType.EXTERNAL_KNOWLEDGE_BASED,
    pr=PrecisionRecall.HPLR,
    params={"lexicon": "slang_abbreviations", "p": 1.0},
    data_files=("lexicons/slang_abbreviations.tsv",),
)
_transformation(
    "use_acronyms",
    "Replaces groups of words with their equivalent acronyms.",
    _lexicon_sub("lexicon"),
    purpose=Purpose.AUGMENTATION,
    levels=_LEX,
    output=_CLEAN_REWRITE,
    algorithm=AlgorithmType.EXTERNAL_KNOWLEDGE_BASED,
    pr=PrecisionRecall.HPLR,
    params={"lexicon": "acronyms", "p": 1.0},
    data_files=("lexicons/acronyms.tsv",),
)
_transformation(
    "emoji_icon_transformation",
    "Converts emoji to ASCII emoticons and vice versa.",
    lambda text, rng, p: xl.emoji_icon(text, p["direction"]),
    purpose=Purpose.AUGMENTATION,
    levels=_LEX,
    output=_output(
        Meaning.ALWAYS_PRESERVED,
        Preservation.ALWAYS_PRESERVED,
        Preservation.POSSIBLY_IMPAIRED,
        Preservation.ALWAYS_PRESERVED,
    ),
    params={"direction": "to-emoji"},
    data_files=("lexicons/emoticons.tsv",),
)
_transformation(
    "add_hashtags",
    "Appends hashtags generated from words of the text.",
    lambda text, rng, p: xl.hashtagify(text, p["k"], rng),
    levels=_LEX,
    output=_output(
        Meaning.POSSIBLY_ADDED,
        Preservation.ALWAYS_PRESERVED,
        Preservation.POSSIBLY_IMPAIRED,
        Preservation.POSSIBLY_IMPAIRED,
        similarity=(Similarity.MEANING,),
    ),
    processing=(InputProcessing.ADDITION,),
    params={"k": 4},
)
_transformation(
    "filler_word_augmentation",
    "Inserts colloquial filler phrases at random positions.",
    lambda text, rng, p: xl.insert_fillers(text, tuple(p["fillers"]), p["p"], rng),
    purpose=Purpose.AUGMENTATION,
    levels=_LEX,
    output=_output(
        Meaning.ALWAYS_PRESERVED,
        Preservation.POSSIBLY_IMPAIRED,
        Preservation.POSSIBLY_IMPAIRED,
        Preservation.POSSIBLY_IMPAIRED,
        similarity=(Similarity.MEANING,),
    ),
    processing=(InputProcessing.ADDITION,),
    params={
        "p": 0.2,
        "fillers": [
            "uhm", "err", "actually", "like", "you know", "basically", "I mean",
            "I think", "I believe", "I would say", "well", "so", "kind of",
            "sort of", "maybe", "perhaps", "probably", "possibly", "most likely",
            "I guess", "honestly", "literally", "right",
        ],
    },
)
_transformation(
    "speech_disfluency_perturbation",
    "Inserts speech disfluencies (filler words) between words; at least one "
    "is always inserted.",
    lambda text, rng, p: xl.insert_fillers(text, tuple(p["fillers"]), p["p"], rng),
    levels=_LEX,
    output=_output(
        Meaning.ALWAYS_PRESERVED,
        Preservation.POSSIBLY_IMPAIRED,
        Preservation.POSSIBLY_IMPAIRED,
        Preservation.POSSIBLY_IMPAIRED,
        similarity=(Similarity.MEANING,),
    ),
    processing=(InputProcessing.ADDITION,),
    params={"p": 0.2, "fillers": ["um", "uh", "erm", "ah", "er"]},
)
_transformation(
    "random_deletion",
    "Randomly removes words with a given probability.",
    lambda text, rng, p: xl.random_word_deletion(text, p["p"], rng),
    levels=_LEX,
    output=_output(
        Meaning.POSSIBLY_REMOVED,
        Preservation.POSSIBLY_IMPAIRED,
        Preservation.POSSIBLY_IMPAIRED,
        Preservation.POSSIBLY_IMPAIRED,
        similarity=(Similarity.MEANING,),
    ),
    processing=(InputProcessing.REMOVAL,),
    params={"p": 0.25},
)

# --- structured rewrites -------------------------------------------------------

_transformation(
    "change_date_format",
    "Rewrites recognized dates into another format without changing the "
    "denoted day.",
    lambda text, rng, p: xn.change_date_format(text, p["target"], rng),
    purpose=Purpose.AUGMENTATION,
    levels=_LEX,
    tasks=_CLASSIFICATION_TASKS | _QA_TASKS,
    output=_CLEAN_REWRITE,
    params={"target": None},
)
_transformation(
    "weekday_month_abbreviation",
    "Abbreviates or expands weekday and month names; plurals are untouched.",
    lambda text, rng, p: xn.abbrev_weekday_month(text, p["direction"]),
    purpose=Purpose.AUGMENTATION,
    levels=_LEX,
    output=_CLEAN_REWRITE,
    params={"direction": "abbreviate"},
)
_transformation(
    "numeric_to_word",
    "Spells numbers in digit form as English cardinal words.",
    lambda text, rng, p: xn.number_to_word(text),
    purpose=Purpose.AUGMENTATION,
    levels=_LEX,
    tasks=_CLASSIFICATION_TASKS | _QA_TASKS,
    output=_CLEAN_REWRITE,
)
_transformation(
    "replace_numerical_values",
    "Replaces numbers with random values of the same digit shape.",
    lambda text, rng, p: xn.replace_numerical_values(text, rng),
    levels=_LEX,
    output=_output(
        Meaning.ALWAYS_CHANGED,
        Preservation.ALWAYS_PRESERVED,
        Preservation.ALWAYS_PRESERVED,
        Preservation.ALWAYS_PRESERVED,
        similarity=(Similarity.OTHER,),
    ),
    notes=(("io_similarity", "same digit shape, different value"),),
)
_transformation(
    "replace_financial_amounts",
    "Converts money mentions to another currency, rewriting amount, format, "
    "and currency marker with one rate per text.",
    lambda text, rng, p: xn.replace_financial_amounts(text, p["target_currency"]),
    purpose=Purpose.AUGMENTATION,
    levels=_LEX,
    output=_CLEAN_REWRITE,
    algorithm=AlgorithmType.EXTERNAL_KNOWLEDGE_BASED,
    params={"target_currency": "JPY"},
    data_files=("tables/rates.tsv", "tables/currencies.tsv"),
)
_transformation(
    "unit_converter",
    "Converts length and weight quantities to a different unit, conserving "
    "the digits-or-words format of the original value.",
    lambda text, rng, p: xn.convert_units(text, p["target"], rng),
    purpose=Purpose.AUGMENTATION,
    levels=_LEX,
    output=_CLEAN_REWRITE,
    algorithm=AlgorithmType.EXTERNAL_KNOWLEDGE_BASED,
    params={"target": None},
    data_files=("tables/units.tsv",),
)

# --- filters -------------------------------------------------------------------

_filter(
    "length",
    "Input length (words or characters) compared against a threshold.",
    lambda ex, p: flt.length_filter(ex, p["unit"], _cmp(p)),
    params={"unit": "words", "op": ">", "threshold": 3},
)
_filter(
    "keywords",
    "Whole-token match against a pre-defined keyword set.",
    lambda ex, p: flt.keywords_filter(ex, p["keywords"]),
    params={"keywords": []},
)
_filter(
    "numeric",
    "Texts containing a numeric value, in digits or spelled out.",
    lambda ex, p: flt.numeric_filter(ex),
)
_filter(
    "encoding",
    "Texts containing characters outside a given encoding.",
    lambda ex, p: flt.encoding_filter(ex, p["encoding"]),
    levels=_CHAR,
    params={"encoding": "ascii"},
)
_filter(
    "special_casing",
    "Texts that are all-lowercase, all-uppercase, or title-cased.",
    lambda ex, p: flt.special_casing_filter(ex),
    levels=_CHAR,
)
_filter(
    "repetitions",
    "Texts with adjacent repeated words.",
    lambda ex, p: flt.repetitions_filter(ex),
)
_filter(
    "diacritic",
    "Texts where any character carries a diacritic.",
    lambda ex, p: flt.diacritic_filter(ex),
    levels=_CHAR,
    langs=("en", "fr", "es", "de"),
)
_filter(
    "token_amount",
    "Texts where a given token occurs in a specified amount.",
    lambda ex, p: flt.token_amount_filter(ex, p["token"], _cmp(p)),
    params={"token": "the", "op": ">=", "threshold": 1},
)
_filter(
    "soundex",
    "Texts containing phonetic (Soundex) matches of the given keywords.",
    lambda ex, p: flt.soundex_match_filter(ex, p["keywords"]),
    algorithm=AlgorithmType.EXTERNAL_KNOWLEDGE_BASED,
    params={"keywords": []},
)
_filter(
    "yesno_question",
    "Questions answerable with yes or no (auxiliary-fronted).",
    lambda ex, p: flt.yesno_question_filter(ex),
    tasks=_QA_TASKS,
    pr=PrecisionRecall.HPLR,
)
_filter(
    "quantitative_ques",
    "Quantitative questions (how many/much/long/...).",
    lambda ex, p: flt.quantitative_question_filter(ex),
    tasks=_QA_TASKS,
    pr=PrecisionRecall.HPLR,
)
_filter(
    "englishness",
    "Texts with uniquely British spellings, vocabulary, or slang.",
    lambda ex, p: flt.englishness_filter(ex, p["threshold"]),
    algorithm=AlgorithmType.EXTERNAL_KNOWLEDGE_BASED,
    pr=PrecisionRecall.HPLR,
    params={"threshold": 1},
    data_files=("lexicons/englishness.txt",),
)
_filter(
    "oscillatory_hallucination",
    "Generation outputs whose repeated-bigram count exceeds the source's by "
    "a threshold.",
    lambda ex, p: flt.oscillatory_hallucination_filter(
        ex.text, ex.text2 if ex.text2 is not None else ex.text, p["threshold"]
    ),
    tasks=(TaskType.TEXT_TO_TEXT, TaskType.QUALITY_ESTIMATION),
    params={"threshold": 2},
)
_filter(
    "gender_bias",
    "Corpus-level check that female-gender representation is not "
    "under-threshold relative to male-gender representation.",
    None,
    purpose=Purpose.BIAS,
    params={"ratio_threshold": 0.8, "categories": ["gender"]},
    data_files=("bias_lexicons.json",),
    corpus_level=True,
)
_filter(
    "universal_bias",
    "Corpus-level balance of representation across several categories.",
    None,
    purpose=Purpose.BIAS,
    params={"ratio_threshold": 0.8, "categories": None},
    data_files=("bias_lexicons.json",),
    corpus_level=True,
)
_filter(
    "named_entity_count",
    "Entity count (gazetteer-stub recognizer) compared against a threshold.",
    lambda ex, p: flt.named_entity_count_filter(ex, _cmp(p)),
    pr=PrecisionRecall.LPHR,
    params={"op": ">", "threshold": 1},
    data_files=("lexicons/given_names.txt",),
    notes=(("recognizer", "capitalized-span stub, approximates a model-based count"),),
)


def _bias_filter_fn(entry_id: str):
    def fn(texts: list[str], params: dict) -> dict[str, flt.FilterVerdict]:
        categories = flt.load_bias_categories()
        wanted = params.get("categories")
        if wanted is not None:
            categories = {name: categories[name] for name in wanted}
        return flt.lexicon_bias_filter(texts, categories, params["ratio_threshold"])

    return fn


_FILTER_FNS["gender_bias"] = _bias_filter_fn("gender_bias")
_FILTER_FNS["universal_bias"] = _bias_filter_fn("universal_bias")


@lru_cache(maxsize=1)
def builtin_registry() -> Registry:
    return Registry(_TRANSFORMATIONS + _FILTERS)


def is_corpus_filter(entry_id: str) -> bool:
    return entry_id in _CORPUS_FILTERS


def merge_params(entry: RegistryEntry, overrides: dict | None) -> dict:
    params = dict(entry.default_params)
    if overrides:
        unknown = set(overrides) - set(params)
        if unknown:
            raise ValueError(
                f"{entry.id}: unknown params {sorted(unknown)}; "
                f"accepted: {sorted(params) or '(none)'}"
            )
        params.update(overrides)
    return params


def apply_transform(entry_id: str, text: str, rng: Rng, params: dict | None = None) -> str:
    registry = builtin_registry()
    entry = registry.get(entry_id)
    if entry.kind is not EntryKind.TRANSFORMATION:
        raise ValueError(f"{entry_id} is not a transformation")
    return _TRANSFORM_FNS[entry_id](text, rng, merge_params(entry, params))


def apply_filter(entry_id: str, example: Example, params: dict | None = None) -> flt.FilterVerdict:
    registry = builtin_registry()
    entry = registry.get(entry_id)
    if entry.kind is not EntryKind.FILTER:
        raise ValueError(f"{entry_id} is not a filter")
    if is_corpus_filter(entry_id):
        raise ValueError(f"{entry_id} is corpus-level; use apply_corpus_filter")
    return _FILTER_FNS[entry_id](example, merge_params(entry, params))


def apply_corpus_filter(
    entry_id: str, texts: list[str], params: dict | None = None
) -> dict[str, flt.FilterVerdict]:
    registry = builtin_registry()
    entry = registry.get(entry_id)
    if not is_corpus_filter(entry_id):
        raise ValueError(f"{entry_id} is not a corpus-level filter")
    return _FILTER_FNS[entry_id](texts, merge_params(entry, params))
