"""
Comando para generar el pool de entrenamiento y la grilla de prueba.
"""
from core.management.base import PhotonicCommand
from datasets.csvio import write_points
from datasets.patterns import generate_pool, generate_test_grid, get_pattern, label_points
from harness.config import run_streams


class Command(PhotonicCommand):
    help = 'Genera pool.csv y test_grid.csv para un patrón.'

    def add_command_arguments(self, parser):
        parser.add_argument('--pattern', type=int, help='Patrón incorporado (1-3).')
        parser.add_argument('--pool-size', dest='pool_size', type=int, help='Tamaño del pool.')
        parser.add_argument('--scheme', dest='pool_scheme', choices=['random', 'even'])

    def run(self, **options):
        config = self.load_config(
            options,
            pattern=options.get('pattern'),
            pool_size=options.get('pool_size'),
            pool_scheme=options.get('pool_scheme'),
        )
        pattern = get_pattern(config.pattern)
        out_dir = self.out_dir(options)
        out_dir.mkdir(parents=True, exist_ok=True)

        seed = config.seeds[0]
        pool = generate_pool(
            pattern, config.pool_size, seed=run_streams(seed)['data'], scheme=config.pool_scheme
        )
        pool_path = write_points(out_dir / 'pool.csv', label_points(pattern, pool))
        grid_path = write_points(out_dir / 'test_grid.csv', generate_test_grid(pattern, config.test_size))

        self.stdout.write(f'Patrón {pattern.id}, semilla {seed}: {len(pool)} datos de pool')
        self.success(f'Escritos {pool_path} y {grid_path}')
