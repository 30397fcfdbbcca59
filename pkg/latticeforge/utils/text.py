import re

_REASONING_RE = re.compile(r"<(think|thinking|reasoning)>.*?</\1>", re.DOTALL | re.IGNORECASE)
_WRAPPING_FENCE_RE = re.compile(r"^\s*```[a-zA-Z0-9-]*[ \t]*\n(.*?)\n\s*```\s*$", re.DOTALL)


def cleanup_llm_output(content: str) -> str:
    """
    Drop hidden-reasoning spans (<think>, <thinking>, <reasoning>) and a markdown
    fence wrapping the whole reply. Drafts inside reasoning spans are not answers.
    """
    if not content:
        return ""
    content = _REASONING_RE.sub("", content)
    fence_match = _WRAPPING_FENCE_RE.match(content)
    if fence_match:
        content = fence_match.group(1).strip()
    return content
