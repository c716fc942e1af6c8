// Entry point: builds the page, reads `?url=` for the server address, and
// starts the session.

import { ViewerSession, ViewerElements } from './viewer'
import { SubtitleMode } from './wire'
import './style.css'

const DEFAULT_URL = 'ws://127.0.0.1:8765'

export function buildPage(root: HTMLElement): ViewerElements {
  root.innerHTML = `
    <div id="banner" hidden></div>
    <div id="error-box" hidden></div>
    <main id="captions" aria-live="polite"></main>
    <div id="latency" hidden title="analysis overran the refresh budget">●</div>
    <footer id="controls">
      <button data-mode="normal">Normal</button>
      <button data-mode="keyword">Keyword</button>
      <button data-mode="dynamik">Dynamik</button>
      <label>
        size ratio
        <input id="ratio" type="range" min="0.1" max="1" step="0.05" value="0.67" />
        <span id="ratio-value">0.67</span>
      </label>
    </footer>
  `
  const byId = (id: string) => root.querySelector(`#${id}`) as HTMLElement
  const buttonFor = (mode: SubtitleMode) =>
    root.querySelector(`button[data-mode="${mode}"]`) as HTMLButtonElement
  return {
    captions: byId('captions'),
    latencyIndicator: byId('latency'),
    banner: byId('banner'),
    errorBox: byId('error-box'),
    modeButtons: {
      normal: buttonFor('normal'),
      keyword: buttonFor('keyword'),
      dynamik: buttonFor('dynamik'),
    },
    ratioSlider: byId('ratio') as HTMLInputElement,
    ratioValue: byId('ratio-value'),
  }
}

export function startApp(root: HTMLElement, location: Location = window.location): ViewerSession {
  const url = new URLSearchParams(location.search).get('url') ?? DEFAULT_URL
  const session = new ViewerSession(url, buildPage(root))
  session.connect()
  return session
}

const rootElement = document.getElementById('app')
if (rootElement) {
  startApp(rootElement)
}
