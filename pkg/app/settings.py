"""
Django settings for the photonic active-learning simulator.

El proyecto no expone servicios web ni usa base de datos: Django aporta el
runner de pruebas, los comandos de gestión (CLI) y la configuración.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/5.2/ref/settings/
"""

import os
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Cargar variables de entorno
# Buscar archivos .env en el directorio base
env_file = BASE_DIR / '.env.development'  # Para desarrollo
if not env_file.exists():
    env_file = BASE_DIR / '.env'  # Fallback
if env_file.exists():
    load_dotenv(env_file)


SECRET_KEY = os.environ.get('SECRET_KEY', 'photonic-insecure-local-only')

DEBUG = os.environ.get('DEBUG', 'False').lower() in ('true', '1', 'yes')

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'core',
    'qsim',
    'datasets',
    'classifier',
    'active_learning',
    'committee',
    'theory',
    'route_planner',
    'harness',
]

# Sin base de datos: solo se usan SimpleTestCase y archivos planos.
DATABASES = {}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

LANGUAGE_CODE = 'es-cl'

TIME_ZONE = 'America/Santiago'

USE_I18N = True

USE_TZ = True


# =============================================
# Parámetros por defecto de la simulación
# =============================================

def _env_float(name, default):
    return float(os.environ.get(name, default))


def _env_int(name, default):
    return int(os.environ.get(name, default))


PHOTONIC = {
    'VQC_SHOTS': _env_int('VQC_SHOTS', 2000),
    'NEVQC_SHOTS': _env_int('NEVQC_SHOTS', 5500),
    'ADAM_LEARNING_RATE': _env_float('ADAM_LEARNING_RATE', 0.1),
    'ADAM_BETA1': _env_float('ADAM_BETA1', 0.9),
    'ADAM_BETA2': _env_float('ADAM_BETA2', 0.999),
    'ADAM_EPS': _env_float('ADAM_EPS', 1e-8),
    'TEST_SIZE': _env_int('TEST_SIZE', 500),
    'POOL_SIZE': _env_int('POOL_SIZE', 20),
    'DEFAULT_SEEDS': [
        int(seed) for seed in os.environ.get('DEFAULT_SEEDS', '0,1,2,3').split(',')
    ],
    'DEFAULT_JOBS': _env_int('DEFAULT_JOBS', 1),
    'ROUTE_METRIC': os.environ.get('ROUTE_METRIC', 'sum'),
    'ARTIFACT_VERSION': os.environ.get('ARTIFACT_VERSION', '1.0.0'),
}


# =============================================
# Logging
# =============================================

LOG_LEVEL = os.environ.get('LOG_LEVEL', 'WARNING').upper()

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'simple': {
            'format': '[{levelname}] {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
    },
    'loggers': {
        app_name: {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        }
        for app_name in INSTALLED_APPS if app_name != 'rest_framework'
    },
}
