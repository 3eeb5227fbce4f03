"""Media-bias analysis engine.

Quantifies three forms of media bias over a multi-newspaper article corpus:
event selection (publishing-rate deviations), labeling and word choice
(sentiment deviations on titles, bodies and entities), and commission and
omission (LLM-extracted ontology graphs compared across newspapers).
"""

__version__ = "0.1.0"
