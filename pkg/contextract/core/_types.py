from typing import Tuple, Union

ConceptId = int  # dense handle, lexicographic order of canonical labels
Label = str  # normalized canonical label
Surface = str  # normalized surface form
Weight = Union[int, float]
Span = Tuple[int, int]
