"""Accessibility and semantic-retention evaluation for scholarly abstract simplification."""

from .corpus import (AnnotationRecord, CorpusStats, SassRecord, aggregate_annotations,
                     corpus_stats, discipline_histogram, load_annotations, load_corpus,
                     render_inference_prompt, render_training_example)
from .errors import SassevalError
from .lexicon import (FrequencyTable, Resources, VoaLexicon, load_frequency_table,
                      load_voa, voa_log_ratio, word_accessibility)
from .pipeline import (ComparisonReport, EndpointConfig, MetricRow, emit_report,
                       evaluate_batch, evaluate_pair, extract_simplified,
                       request_simplification)
from .readability import ReadabilityScores, ari, flesch_kincaid, grade_band
from .sari import SariScore, ngram_sets, sari
from .semantic import EmbeddedText, HttpEmbeddingProvider, SemanticScore, bertscore
from .stats import (PairedT, SignificanceTest, bonferroni, paired_t_test,
                    student_t_two_tailed_p)
from .text_core import AnalyzedDocument, Sentence, Token, analyze, count_syllables, \
    segment_sentences, tokenize

__version__ = "0.1.0"

__all__ = [
    "AnalyzedDocument", "AnnotationRecord", "ComparisonReport", "CorpusStats",
    "EmbeddedText", "EndpointConfig", "FrequencyTable", "HttpEmbeddingProvider",
    "MetricRow", "PairedT", "ReadabilityScores", "Resources", "SariScore",
    "SassRecord", "SassevalError", "SemanticScore", "Sentence", "SignificanceTest",
    "Token", "VoaLexicon", "aggregate_annotations", "analyze", "ari", "bertscore",
    "bonferroni", "corpus_stats", "count_syllables", "discipline_histogram",
    "emit_report", "evaluate_batch", "evaluate_pair", "extract_simplified",
    "flesch_kincaid", "grade_band", "load_annotations", "load_corpus",
    "load_frequency_table", "load_voa", "ngram_sets", "paired_t_test",
    "render_inference_prompt", "render_training_example", "request_simplification",
    "sari", "segment_sentences", "student_t_two_tailed_p", "tokenize",
    "voa_log_ratio", "word_accessibility",
]
