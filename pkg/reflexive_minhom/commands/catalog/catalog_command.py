from reflexive_minhom.commands.command_base import CommandBase, EXIT_SUCCESS
from reflexive_minhom.hardness.labeling import identify_obstructions
from reflexive_minhom.recognition.catalog import derive_obstruction_catalog, write_catalog

# Identification needs the four-vertex obstructions
IDENTIFICATION_SIZE = 4


class CatalogCommand(CommandBase):
    """
    Derives the obstruction catalog up to max_size vertices and writes it to out (see write_catalog for the layout).
    """

    def _run(self, out):
        directory = self._output_path(self._required("out"))
        catalog = derive_obstruction_catalog(self._config.max_size, self._config.workers)
        ambiguities = []

        if self._config.identify and self._config.max_size >= IDENTIFICATION_SIZE:
            identification = identify_obstructions(catalog)
            catalog = identification.catalog
            ambiguities = identification.ambiguities

        write_catalog(catalog, directory)

        pairs = [("max_size", catalog.max_size), ("members", len(catalog)),
                 ("converse_classes", len(catalog.converse_classes))]
        pairs += [("member", f"{member.file_name()} {member.name} size={member.size} class={member.converse_class}")
                  for member in catalog.members]
        pairs += [("ambiguity", ambiguity) for ambiguity in ambiguities]
        pairs.append(("directory", directory))

        self._write_report(out, pairs)
        return EXIT_SUCCESS
