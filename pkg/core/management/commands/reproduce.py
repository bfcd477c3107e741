"""
Comando para reproducir la matriz completa patrón × estrategia × clasificador
con sus razones de costo.
"""
from active_learning.strategies import Strategy
from core.management.base import PhotonicCommand
from datasets.patterns import PATTERNS
from harness.outputs import emit_outputs
from harness.runner import cost_ratios, run_matrix
from qsim.circuits import ClassifierKind

DEFAULT_CLASSIFIERS = (ClassifierKind.VQC, ClassifierKind.NEVQC)


class Command(PhotonicCommand):
    help = 'Corre con y sin AL para cada patrón y clasificador y escribe ratios.csv y table.csv.'

    def add_command_arguments(self, parser):
        parser.add_argument('--patterns', type=int, nargs='+', choices=sorted(PATTERNS))
        parser.add_argument('--classifiers', nargs='+', choices=ClassifierKind.values)

    def run(self, **options):
        patterns = options.get('patterns') or sorted(PATTERNS)
        classifiers = options.get('classifiers') or DEFAULT_CLASSIFIERS

        configs = [
            self.load_config(options, classifier=classifier, pattern=pattern, strategy=strategy)
            for classifier in classifiers
            for pattern in patterns
            for strategy in (Strategy.NONE, Strategy.USAMP, Strategy.QBC)
        ]
        self.stdout.write(f'{len(configs)} configuraciones, {len(configs[0].seeds)} semillas cada una')
        suites = run_matrix(configs, self.jobs(options))

        ratios = []
        for k in range(0, len(suites), 3):
            baseline, usamp, qbc = suites[k:k + 3]
            for suite in (usamp, qbc):
                ratio = cost_ratios(suite, baseline)
                ratios.append((suite, ratio))
                mark = f'{ratio.computation_ratio:.3f}' if ratio.matched else '×'
                self.stdout.write(
                    f'{suite.name}: etiquetado {ratio.labeling_ratio:.3f}, cómputo {mark}'
                )

        written = emit_outputs(suites, self.out_dir(options), ratios=ratios)
        self.success(f'{len(written)} archivos escritos')
