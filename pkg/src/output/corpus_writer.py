"""
Écriture d'un corpus aléatoire sur disque: un fichier `.ideal` par membre et
un manifeste JSON (paramètres, graine, empreintes).
"""

import json
import logging
from pathlib import Path
from typing import Optional, Union

from src.algebra.ideal_format import write_ideal_file
from src.inputs.random_corpus import CorpusParameters, RandomCorpusInput

logger = logging.getLogger("bettilab.output")

MANIFEST_NAME = "manifest.json"


def gen_corpus(
    params: CorpusParameters,
    seed: int,
    out_dir: Union[str, Path],
    max_retries: Optional[int] = None,
) -> dict:
    """
    Génère le corpus et l'écrit dans `out_dir`.

    Les fichiers sont nommés `member-0000.ideal`, ...; la même graine et les
    mêmes paramètres redonnent exactement les mêmes fichiers.

    Returns:
        Le manifeste écrit
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    with RandomCorpusInput(params, seed=seed, max_retries=max_retries) as source:
        ideals = source.fetch_ideals()

    members = []
    for i, ideal in enumerate(ideals):
        name = f"member-{i:04d}.ideal"
        write_ideal_file(ideal, out_dir / name)
        members.append({"file": name, "fingerprint": ideal.fingerprint})

    manifest = {"parameters": params.to_json(), "seed": seed, "members": members}
    (out_dir / MANIFEST_NAME).write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    logger.info(f"Corpus de {len(members)} idéaux écrit dans {out_dir}")
    return manifest
