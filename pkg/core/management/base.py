"""
Base común para los comandos del simulador: opciones compartidas y
traducción de errores a códigos de salida.
"""
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from classifier.params import Backend
from core.exceptions import ConfigError, PhotonicError
from harness.config import derive_seeds, load_experiment_config


class PhotonicCommand(BaseCommand):
    """Comando con `--config`, `--out`, `--seed`, `--jobs` y `--backend`.

    Los errores de configuración salen con código 2 y los de ejecución con 1.
    """

    def add_arguments(self, parser):
        parser.add_argument('--config', help='Archivo `clave = valor` con la configuración.')
        parser.add_argument('--out', help='Directorio de salida.')
        parser.add_argument('--seed', type=int, help='Semilla maestra; deriva una semilla por corrida.')
        parser.add_argument('--jobs', type=int, help='Procesos de trabajo.')
        parser.add_argument('--backend', choices=Backend.values, help='Backend de expectativas.')
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        """Opciones propias del comando."""

    def handle(self, *args, **options):
        try:
            self.run(**options)
        except ConfigError as exc:
            raise CommandError(str(exc), returncode=2) from exc
        except (PhotonicError, OSError) as exc:
            raise CommandError(str(exc), returncode=1) from exc

    def run(self, **options):
        raise NotImplementedError('Los comandos deben implementar run()')

    def load_config(self, options, **overrides):
        """Configuración resuelta: settings, archivo, luego flags de la CLI."""
        if options.get('backend'):
            overrides.setdefault('backend', options['backend'])
        config = load_experiment_config(options.get('config'), **overrides)
        if options.get('seed') is not None:
            if options['seed'] < 0:
                raise ConfigError('--seed debe ser no negativa')
            config = config.with_overrides(seeds=derive_seeds(options['seed'], len(config.seeds)))
        return config

    def jobs(self, options) -> int:
        jobs = options.get('jobs')
        if jobs is None:
            return settings.PHOTONIC['DEFAULT_JOBS']
        if jobs < 1:
            raise ConfigError('--jobs debe ser al menos 1')
        return jobs

    def out_dir(self, options, default: str = 'out') -> Path:
        return Path(options.get('out') or default)

    def success(self, message: str):
        self.stdout.write(self.style.SUCCESS(message))
