from .cubic import Corpus, enumerate_cubic, load_corpus, KNOWN_COUNTS, STRATEGIES
